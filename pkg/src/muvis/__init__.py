"""Mutual-visibility and total mutual-visibility in graphs and strong products."""

from .core import (
    BlockDecomposition,
    CapacityExceededError,
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    InvalidGraphError,
    InvalidParameterError,
    MuvisError,
    VertexSet,
    all_pairs_distances,
    block_decomposition,
    build_graph,
    convex_hull,
    enabling_vertices,
    geodesic_interval,
    is_connected,
    is_convex,
    twin_relation,
    universal_vertices,
)
from .visibility import (
    Certificate,
    SolveOptions,
    SolveResult,
    brute_force_mu,
    is_feasible_tmv_set,
    is_mv_set,
    is_pair_visible,
    is_tmv_set,
    mu_exact,
    mu_heuristic,
    mu_total_exact,
)

__version__ = "0.1.0"
