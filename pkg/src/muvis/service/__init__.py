"""HTTP service exposing the muvis core."""
