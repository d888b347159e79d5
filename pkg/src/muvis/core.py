"""Core graph representation and metric machinery.

Graphs are simple, undirected, with dense integer vertex ids 0..n-1 and
bit-row adjacency.  Everything here is immutable after construction and
safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

#: Hard cap on vertex counts accepted by graph and product builders.
MAX_VERTICES = 512

#: Marker used in distance matrices for unreachable pairs.
UNREACHABLE = -1


class MuvisError(Exception):
    """Base class for all library errors."""


class InvalidGraphError(MuvisError):
    """Malformed graph input (bad endpoint, loop edge, bad capacity)."""


class DisconnectedGraphError(MuvisError):
    """An operation defined only for connected graphs got a disconnected one."""


class CapacityExceededError(MuvisError):
    """A construction would exceed MAX_VERTICES."""


class InvalidParameterError(MuvisError):
    """Bad family / recipe / option parameters."""


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Fixed-capacity bit vector over a graph's vertex ids."""

    capacity: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.capacity < 0:
            raise InvalidGraphError("capacity must be non-negative")
        if self.mask < 0 or self.mask >> self.capacity:
            raise InvalidGraphError("set bit outside capacity")

    @classmethod
    def from_iterable(cls, capacity: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < capacity:
                raise InvalidGraphError(f"vertex {v} out of range [0, {capacity})")
            mask |= 1 << v
        return cls(capacity, mask)

    @classmethod
    def full(cls, capacity: int) -> "VertexSet":
        return cls(capacity, (1 << capacity) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.capacity and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return _popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "VertexSet") -> None:
        if other.capacity != self.capacity:
            raise InvalidGraphError("vertex sets over different capacities")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.capacity, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.capacity, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.capacity, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.capacity, ~self.mask & ((1 << self.capacity) - 1))

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.capacity:
            raise InvalidGraphError(f"vertex {v} out of range")
        return VertexSet(self.capacity, self.mask | 1 << v)

    def remove(self, v: int) -> "VertexSet":
        return VertexSet(self.capacity, self.mask & ~(1 << v))

    def members(self) -> List[int]:
        return list(self)


class Graph:
    """Immutable simple undirected graph with bit-row adjacency."""

    __slots__ = ("n", "adj", "_edge_count")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj: Tuple[int, ...] = tuple(adj)
        self._edge_count = sum(_popcount(a) for a in self.adj) // 2

    @property
    def m(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.from_iterable(self.n, vertices)

    def full_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def empty_set(self) -> VertexSet:
        return VertexSet(self.n)

    def degree_sequence(self) -> List[int]:
        return [self.degree(v) for v in range(self.n)]

    def is_complete(self) -> bool:
        return all(self.degree(v) == self.n - 1 for v in range(self.n))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating symmetric entries."""

    if n < 0:
        raise InvalidGraphError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise CapacityExceededError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


class DistanceMatrix:
    """All-pairs BFS hop distances, computed once and shared.

    Also caches, per source vertex, the bit masks of distance levels; these
    are the workhorse of geodesic-related checks.
    """

    __slots__ = ("n", "rows", "_levels")

    def __init__(self, n: int, rows: List[List[int]]):
        self.n = n
        self.rows = rows
        self._levels: List[Optional[List[int]]] = [None] * n

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def eccentricity(self, u: int) -> int:
        return max(self.rows[u])

    def levels(self, u: int) -> List[int]:
        """Bit masks of vertices at each hop distance from u."""

        cached = self._levels[u]
        if cached is None:
            ecc = max(self.rows[u])
            cached = [0] * (ecc + 1)
            for v, dv in enumerate(self.rows[u]):
                if dv >= 0:
                    cached[dv] |= 1 << v
            self._levels[u] = cached
        return cached


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """BFS from every vertex; disconnected pairs get UNREACHABLE."""

    n = graph.n
    adj = graph.adj
    rows: List[List[int]] = []
    for src in range(n):
        dist = [UNREACHABLE] * n
        dist[src] = 0
        frontier = 1 << src
        seen = frontier
        hops = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            hops += 1
            for v in _bits(nxt):
                dist[v] = hops
            seen |= nxt
            frontier = nxt
        rows.append(dist)
    return DistanceMatrix(n, rows)


def is_connected(graph: Graph) -> bool:
    """Reachability from vertex 0; K0 and K1 count as connected."""

    if graph.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= graph.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << graph.n) - 1


def require_connected(graph: Graph) -> None:
    if not is_connected(graph):
        raise DisconnectedGraphError("operation requires a connected graph")


def neighborhood_of_set(graph: Graph, mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= graph.adj[v]
    return out


def geodesic_interval(graph: Graph, dist: DistanceMatrix, u: int, v: int) -> VertexSet:
    """All vertices on at least one u,v-geodesic, endpoints included."""

    duv = dist.d(u, v)
    if duv < 0:
        raise DisconnectedGraphError(f"vertices {u} and {v} are in different components")
    mask = 0
    ru, rv = dist.rows[u], dist.rows[v]
    for w in range(graph.n):
        if ru[w] >= 0 and rv[w] >= 0 and ru[w] + rv[w] == duv:
            mask |= 1 << w
    return VertexSet(graph.n, mask)


def interval_mask(dist: DistanceMatrix, u: int, v: int) -> int:
    duv = dist.d(u, v)
    mask = 0
    ru, rv = dist.rows[u], dist.rows[v]
    for w in range(dist.n):
        if ru[w] >= 0 and rv[w] >= 0 and ru[w] + rv[w] == duv:
            mask |= 1 << w
    return mask


def is_convex(graph: Graph, dist: DistanceMatrix, subset: VertexSet) -> bool:
    """True iff every geodesic between members stays inside the set."""

    members = subset.members()
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if dist.d(u, v) < 0:
                return False
            if interval_mask(dist, u, v) & ~subset.mask:
                return False
    return True


def convex_hull(graph: Graph, dist: DistanceMatrix, subset: VertexSet) -> VertexSet:
    """Least fixed point of interval closure over all pairs in the set."""

    require_connected(graph)
    current = subset.mask
    while True:
        nxt = current
        members = list(_bits(current))
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                nxt |= interval_mask(dist, u, v)
        if nxt == current:
            return VertexSet(graph.n, current)
        current = nxt


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components and cut vertices of a connected graph."""

    blocks: Tuple[VertexSet, ...]
    cut_vertices: VertexSet


def block_decomposition(graph: Graph) -> BlockDecomposition:
    """Iterative Hopcroft-Tarjan biconnected components."""

    require_connected(graph)
    n = graph.n
    if n == 0:
        return BlockDecomposition((), VertexSet(0))
    if n == 1:
        return BlockDecomposition((VertexSet(1, 1),), VertexSet(1))

    disc = [0] * n
    low = [0] * n
    timer = 1
    edge_stack: List[Tuple[int, int]] = []
    blocks: List[VertexSet] = []
    cut_mask = 0

    # Iterative DFS from vertex 0 (graph is connected).
    root = 0
    parent = [-1] * n
    child_count = [0] * n
    it_stack = [(root, iter(graph.neighbors(root).members()))]
    disc[root] = low[root] = timer
    timer += 1

    def pop_block(u: int, v: int) -> None:
        # Edges pushed after the tree edge (u, v) all belong to this block.
        mask = 0
        while True:
            a, b = edge_stack.pop()
            mask |= (1 << a) | (1 << b)
            if (a, b) == (u, v):
                break
        blocks.append(VertexSet(n, mask))

    while it_stack:
        u, neigh = it_stack[-1]
        advanced = False
        for v in neigh:
            if v == parent[u]:
                continue
            if disc[v] == 0:
                parent[v] = u
                child_count[u] += 1
                disc[v] = low[v] = timer
                timer += 1
                edge_stack.append((u, v))
                it_stack.append((v, iter(graph.neighbors(v).members())))
                advanced = True
                break
            elif disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])
        if not advanced:
            it_stack.pop()
            if it_stack:
                p = it_stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    pop_block(p, u)
                    if p != root or child_count[p] > 1:
                        cut_mask |= 1 << p

    return BlockDecomposition(tuple(blocks), VertexSet(n, cut_mask))


def universal_vertices(graph: Graph) -> VertexSet:
    mask = 0
    for v in range(graph.n):
        if graph.degree(v) == graph.n - 1:
            mask |= 1 << v
    return VertexSet(graph.n, mask)


def enabling_vertices(graph: Graph) -> VertexSet:
    """Vertices v adjacent to every u whose degree in G-v is below n-2.

    The condition may hold vacuously (no low-degree vertex in G-v), in which
    case v still qualifies; this keeps the equivalence with mu(G) >= n-1.
    """

    n = graph.n
    if n < 2:
        raise InvalidParameterError("enabling vertices need at least 2 vertices")
    mask = 0
    for v in range(n):
        ok = True
        for u in range(n):
            if u == v:
                continue
            deg_minus_v = graph.degree(u) - (1 if graph.has_edge(u, v) else 0)
            if deg_minus_v < n - 2 and not graph.has_edge(u, v):
                ok = False
                break
        if ok:
            mask |= 1 << v
    return VertexSet(n, mask)


def twin_relation(graph: Graph, u: int, v: int) -> str:
    """Classify u, v as 'true-twin', 'false-twin', or 'none'."""

    if u == v:
        raise InvalidParameterError("twin relation needs two distinct vertices")
    bit_u, bit_v = 1 << u, 1 << v
    if graph.has_edge(u, v):
        if graph.adj[u] | bit_u == graph.adj[v] | bit_v:
            return "true-twin"
    else:
        if graph.adj[u] == graph.adj[v]:
            return "false-twin"
    return "none"


def induced_subgraph(graph: Graph, subset: VertexSet) -> Tuple[Graph, List[int]]:
    """Induced subgraph on the set, plus the list mapping new ids to old ids."""

    old_ids = subset.members()
    index = {old: new for new, old in enumerate(old_ids)}
    adj = [0] * len(old_ids)
    for new_u, old_u in enumerate(old_ids):
        for old_v in _bits(graph.adj[old_u] & subset.mask):
            adj[new_u] |= 1 << index[old_v]
    return Graph(len(old_ids), adj), old_ids
