"""Mutual-visibility machinery: pair visibility, set checkers, exact solvers.

The solvers exploit that mv, tmv, and feasible-tmv sets are all downward
closed (every subset of a valid set is valid), so a depth-first search over
ascending vertex indices with include-before-exclude branching and the
trivial cardinality bound is exact.  A candidate vertex is dropped as soon
as adding it to the current set fails; because validity is downward closed,
no superset could revive it.

Incremental checks: adding v to the blocker set X can break a previously
visible pair (a, b) only when v lies on some a,b-geodesic, so only those
pairs are rechecked (checking just the pairs that involve v would be
unsound: think of adding the middle vertex of a path).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .core import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    InvalidParameterError,
    MuvisError,
    VertexSet,
    all_pairs_distances,
    require_connected,
)

KINDS = ("mv", "tmv", "feasible-tmv")


class OracleLimitError(MuvisError):
    """Brute-force oracle asked to enumerate beyond its size limit."""


class BudgetExceededError(MuvisError):
    """Internal signal that a node/time budget ran out."""


@dataclass(frozen=True)
class Certificate:
    """A candidate set with its claimed kind and verification status."""

    vertices: VertexSet
    kind: str
    verified: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: Certificate
    nodes_explored: int
    elapsed: float
    exact: bool = True


@dataclass(frozen=True)
class SolveOptions:
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    oracle_limit: int = 18
    threads: int = 1


def _pair_visible(graph: Graph, dist: DistanceMatrix, x_mask: int, u: int, v: int) -> bool:
    """Layered DP over the shortest-path structure between u and v.

    A vertex on a u,v-geodesic is admissible when it is u, v, or outside X;
    reachability propagates level by level from u.
    """

    duv = dist.rows[u][v]
    if duv == 1:
        return True
    levels_u = dist.levels(u)
    levels_v = dist.levels(v)
    blocked = x_mask & ~(1 << u) & ~(1 << v)
    adj = graph.adj
    reach = 1 << u
    for t in range(1, duv):
        cand = levels_u[t] & levels_v[duv - t] & ~blocked
        if not cand:
            return False
        nb = 0
        m = reach
        while m:
            low = m & -m
            nb |= adj[low.bit_length() - 1]
            m ^= low
        reach = nb & cand
        if not reach:
            return False
    return bool(graph.adj[v] & reach)


def is_pair_visible(
    graph: Graph, dist: DistanceMatrix, x: VertexSet, u: int, v: int
) -> bool:
    """True iff some u,v-geodesic has no internal vertex in X."""

    if u == v:
        raise InvalidParameterError("pair visibility needs two distinct vertices")
    if dist.d(u, v) < 0:
        raise DisconnectedGraphError(f"vertices {u} and {v} are in different components")
    return _pair_visible(graph, dist, x.mask, u, v)


def is_mv_set(graph: Graph, dist: DistanceMatrix, x: VertexSet) -> bool:
    """True iff the members of X are pairwise X-visible."""

    require_connected(graph)
    members = x.members()
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if not _pair_visible(graph, dist, x.mask, u, v):
                return False
    return True


def is_tmv_set(graph: Graph, dist: DistanceMatrix, x: VertexSet) -> bool:
    """True iff every pair of vertices of the graph is X-visible."""

    require_connected(graph)
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if not _pair_visible(graph, dist, x.mask, u, v):
                return False
    return True


def is_feasible_tmv_set(graph: Graph, dist: DistanceMatrix, x: VertexSet) -> bool:
    """Total mutual-visibility plus: adjacent members share an outside neighbor."""

    if not is_tmv_set(graph, dist, x):
        return False
    members = x.members()
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if graph.has_edge(u, v):
                if not (graph.adj[u] & graph.adj[v] & ~x.mask):
                    return False
    return True


def check_set(graph: Graph, dist: DistanceMatrix, x: VertexSet, kind: str) -> bool:
    if kind == "mv":
        return is_mv_set(graph, dist, x)
    if kind == "tmv":
        return is_tmv_set(graph, dist, x)
    if kind == "feasible-tmv":
        return is_feasible_tmv_set(graph, dist, x)
    raise InvalidParameterError(f"unknown set kind {kind!r}")


def make_certificate(graph: Graph, dist: DistanceMatrix, x: VertexSet, kind: str) -> Certificate:
    """Verify and wrap a set; refuses to emit unverified certificates."""

    if not check_set(graph, dist, x, kind):
        raise InvalidParameterError(f"set {x.members()} is not a valid {kind} set")
    return Certificate(x, kind, True)


class _Searcher:
    """Shared engine for the exact mv / tmv / feasible-tmv maximization."""

    def __init__(self, graph: Graph, dist: DistanceMatrix, kind: str, options: SolveOptions):
        self.graph = graph
        self.dist = dist
        self.kind = kind
        self.options = options
        self.nodes = 0
        self.best_value = -1
        self.best_set: List[int] = []
        self.deadline = (
            time.monotonic() + options.time_budget if options.time_budget else None
        )
        self.truncated = False

    def _tick(self) -> None:
        self.nodes += 1
        if self.options.node_budget is not None and self.nodes > self.options.node_budget:
            raise BudgetExceededError("node budget exceeded")
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError("time budget exceeded")

    def _can_add(self, members: List[int], x_mask: int, v: int) -> bool:
        graph, dist = self.graph, self.dist
        rows = dist.rows
        new_mask = x_mask | 1 << v
        rv = rows[v]
        if self.kind == "mv":
            for x in members:
                if not _pair_visible(graph, dist, new_mask, x, v):
                    return False
            for i, a in enumerate(members):
                ra = rows[a]
                for b in members[i + 1 :]:
                    if ra[v] + rv[b] == ra[b]:
                        if not _pair_visible(graph, dist, new_mask, a, b):
                            return False
            return True
        # tmv / feasible-tmv: every graph pair with v strictly inside some
        # geodesic must be rechecked.
        n = graph.n
        for a in range(n):
            if a == v:
                continue
            ra = rows[a]
            dav = ra[v]
            for b in range(a + 1, n):
                if b == v:
                    continue
                if dav + rv[b] == ra[b]:
                    if not _pair_visible(graph, dist, new_mask, a, b):
                        return False
        if self.kind == "feasible-tmv":
            adj = graph.adj
            # New adjacent pairs (v, x) need a common neighbor outside.
            for x in members:
                if adj[v] >> x & 1:
                    if not (adj[v] & adj[x] & ~new_mask):
                        return False
            # Old adjacent pairs whose outside witness may have been v.
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    if adj[a] >> b & 1 and (adj[a] & adj[b]) >> v & 1:
                        if not (adj[a] & adj[b] & ~new_mask):
                            return False
        return True

    def _record(self, members: List[int]) -> None:
        if len(members) > self.best_value:
            self.best_value = len(members)
            self.best_set = list(members)

    def _extend(self, members: List[int], x_mask: int, candidates: List[int]) -> None:
        self._tick()
        self._record(members)
        for i, v in enumerate(candidates):
            if len(members) + len(candidates) - i <= self.best_value:
                return
            new_mask = x_mask | 1 << v
            members.append(v)
            rest = [w for w in candidates[i + 1 :] if self._can_add(members, new_mask, w)]
            self._extend(members, new_mask, rest)
            members.pop()

    def run(self) -> SolveResult:
        start = time.monotonic()
        root_candidates = [
            v for v in range(self.graph.n) if self._can_add([], 0, v)
        ]
        try:
            self._extend([], 0, root_candidates)
        except BudgetExceededError:
            self.truncated = True
        if self.best_value < 0:
            # Empty set is always valid for every kind on a connected graph.
            self.best_value = 0
            self.best_set = []
        vertices = VertexSet.from_iterable(self.graph.n, self.best_set)
        cert = make_certificate(self.graph, self.dist, vertices, self.kind)
        return SolveResult(
            value=self.best_value,
            certificate=cert,
            nodes_explored=self.nodes,
            elapsed=time.monotonic() - start,
            exact=not self.truncated,
        )


def solve_exact(
    graph: Graph,
    kind: str,
    options: SolveOptions = SolveOptions(),
    dist: Optional[DistanceMatrix] = None,
) -> SolveResult:
    if kind not in KINDS:
        raise InvalidParameterError(f"unknown set kind {kind!r}")
    require_connected(graph)
    if dist is None:
        dist = all_pairs_distances(graph)
    return _Searcher(graph, dist, kind, options).run()


def mu_exact(graph: Graph, options: SolveOptions = SolveOptions()) -> SolveResult:
    """Exact mutual-visibility number via branch and bound."""

    return solve_exact(graph, "mv", options)


def mu_total_exact(graph: Graph, options: SolveOptions = SolveOptions()) -> SolveResult:
    """Exact total mutual-visibility number; 0 means only the empty set works."""

    return solve_exact(graph, "tmv", options)


def max_feasible_tmv(graph: Graph, options: SolveOptions = SolveOptions()) -> SolveResult:
    """Largest feasible total mutual-visibility set (downward closed as well)."""

    return solve_exact(graph, "feasible-tmv", options)


def brute_force_mu(
    graph: Graph, kind: str = "mv", oracle_limit: int = 18
) -> SolveResult:
    """Ground-truth oracle: full subset enumeration in ascending mask order."""

    if kind not in KINDS:
        raise InvalidParameterError(f"unknown set kind {kind!r}")
    require_connected(graph)
    n = graph.n
    if n > oracle_limit:
        raise OracleLimitError(f"{n} vertices exceeds the oracle limit {oracle_limit}")
    dist = all_pairs_distances(graph)
    start = time.monotonic()
    best_mask = 0
    best_size = 0
    checked = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best_size:
            continue
        checked += 1
        if check_set(graph, dist, VertexSet(n, mask), kind):
            best_mask = mask
            best_size = size
    cert = make_certificate(graph, dist, VertexSet(n, best_mask), kind)
    return SolveResult(
        value=best_size,
        certificate=cert,
        nodes_explored=checked,
        elapsed=time.monotonic() - start,
    )


def mu_heuristic(
    graph: Graph,
    time_budget: float = 10.0,
    seed: int = 0,
    max_rounds: Optional[int] = None,
    stop_at: Optional[int] = None,
) -> Certificate:
    """Greedy seeding plus drop-and-refill local search for large instances.

    Returns a verified mv certificate; its size is a lower bound on mu(G).
    """

    require_connected(graph)
    dist = all_pairs_distances(graph)
    rng = random.Random(seed)
    n = graph.n
    searcher = _Searcher(graph, dist, "mv", SolveOptions())

    def greedy_fill(members: List[int], mask: int, order: List[int]) -> Tuple[List[int], int]:
        for v in order:
            if mask >> v & 1:
                continue
            if searcher._can_add(members, mask, v):
                members.append(v)
                mask |= 1 << v
        return members, mask

    order = list(range(n))
    current, cur_mask = greedy_fill([], 0, order)
    best = list(current)

    deadline = time.monotonic() + time_budget
    rounds = 0
    while time.monotonic() < deadline:
        if stop_at is not None and len(best) >= stop_at:
            break
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            break
        if rng.random() < 0.15 or not current:
            # Restart from a fresh random greedy solution.
            order = list(range(n))
            rng.shuffle(order)
            trial, trial_mask = greedy_fill([], 0, order)
        else:
            # Drop one or two members, refill in random order (plateau moves
            # accepted so the search can drift across equal-size solutions).
            trial = list(current)
            for _ in range(rng.randrange(1, 3)):
                if trial:
                    trial.pop(rng.randrange(len(trial)))
            trial_mask = 0
            for v in trial:
                trial_mask |= 1 << v
            order = list(range(n))
            rng.shuffle(order)
            trial, trial_mask = greedy_fill(trial, trial_mask, order)
        if len(trial) >= len(current):
            current, cur_mask = trial, trial_mask
        if len(current) > len(best):
            best = list(current)
    return make_certificate(
        graph, dist, VertexSet.from_iterable(n, best), "mv"
    )
