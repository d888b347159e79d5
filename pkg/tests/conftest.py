import random
import re

import pytest

from muvis.core import Graph, build_graph, is_connected


def random_connected_graph(rng: random.Random, n_min: int = 2, n_max: int = 8,
                           p: float = 0.5) -> Graph:
    """Seeded G(n, p) conditioned on connectivity."""

    while True:
        n = rng.randrange(n_min, n_max + 1)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20240817)


def pytest_runtest_logreport(report):
    """Emit one pass/fail line per acceptance criterion."""

    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    match = re.search(r"criterion_(\d+)(\w*)", report.nodeid)
    if not match:
        return
    label = f"{int(match.group(1))}{match.group(2)}"
    if report.passed:
        status = "PASS"
    elif report.skipped:
        status = (
            "EXPECTED FAIL (documented discrepancy)"
            if hasattr(report, "wasxfail")
            else "SKIP"
        )
    else:
        status = "FAIL"
    print(f"\n[acceptance] criterion {label}: {status}")
