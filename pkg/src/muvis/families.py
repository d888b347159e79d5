"""Deterministic and seeded generators for the graph families we study.

Randomized builders take an explicit seed (default 0) so that every corpus
used by the audits and the acceptance suite is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .core import (
    Graph,
    InvalidParameterError,
    block_decomposition,
    build_graph,
    is_connected,
)

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "complete-multipartite",
    "complete-split",
    "star",
    "subdivided-star",
    "random-tree",
    "random-block-graph",
    "cograph",
    "cactus",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: kind, kind-specific parameters, optional seed."""

    kind: str
    params: Dict[str, object] = field(default_factory=dict)
    seed: int = 0


@dataclass(frozen=True)
class CographRecipe:
    """Splitting sequence: 'start', then ('true'|'false', target_index)."""

    steps: Tuple[Tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.steps or self.steps[0] != ("start", -1):
            raise InvalidParameterError("cograph recipe must begin with start")
        for i, (op, target) in enumerate(self.steps[1:], start=1):
            if op not in ("true", "false"):
                raise InvalidParameterError(f"unknown cograph op {op!r}")
            if not 0 <= target < i:
                raise InvalidParameterError(f"twin target {target} does not exist at step {i}")

    @classmethod
    def from_ops(cls, ops: Sequence[Tuple[str, int]]) -> "CographRecipe":
        return cls(tuple(ops))

    @classmethod
    def start(cls) -> "CographRecipe":
        return cls((("start", -1),))


@dataclass(frozen=True)
class CactusRecipe:
    """Attachment sequence: root-cycle, then attach-cycle / attach-path steps.

    Each step is (op, at, length); the root step uses at = -1.
    """

    steps: Tuple[Tuple[str, int, int], ...]

    def __post_init__(self) -> None:
        if not self.steps or self.steps[0][0] != "root-cycle":
            raise InvalidParameterError("cactus recipe must begin with root-cycle")
        n = 0
        for i, (op, at, length) in enumerate(self.steps):
            if op == "root-cycle":
                if i != 0:
                    raise InvalidParameterError("root-cycle only allowed as the first step")
                if length < 3:
                    raise InvalidParameterError("cycle length must be at least 3")
                n = length
            elif op == "attach-cycle":
                if length < 3:
                    raise InvalidParameterError("cycle length must be at least 3")
                if not 0 <= at < n:
                    raise InvalidParameterError(f"attachment vertex {at} does not exist")
                n += length - 1
            elif op == "attach-path":
                if length < 1:
                    raise InvalidParameterError("path length must be at least 1")
                if not 0 <= at < n:
                    raise InvalidParameterError(f"attachment vertex {at} does not exist")
                n += length
            else:
                raise InvalidParameterError(f"unknown cactus op {op!r}")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycle length must be at least 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("complete graph needs at least 1 vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite_graph(parts: Sequence[int]) -> Graph:
    if len(parts) < 2:
        raise InvalidParameterError("complete multipartite needs at least 2 parts")
    if any(p < 1 for p in parts):
        raise InvalidParameterError("every part must be non-empty")
    n = sum(parts)
    labels: List[int] = []
    for idx, p in enumerate(parts):
        labels.extend([idx] * p)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if labels[i] != labels[j]]
    return build_graph(n, edges)


def complete_split_graph(independent: int, clique: int) -> Graph:
    """Independent set 0..independent-1 joined completely to a clique."""

    if independent < 1 or clique < 1:
        raise InvalidParameterError("both sides of a complete split graph must be non-empty")
    n = independent + clique
    edges = [(i, j) for i in range(independent, n) for j in range(i + 1, n)]
    edges += [(i, j) for i in range(independent) for j in range(independent, n)]
    return build_graph(n, edges)


def star_graph(leaves: int) -> Graph:
    if leaves < 1:
        raise InvalidParameterError("star needs at least 1 leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivide(graph: Graph, times: int) -> Graph:
    """Replace every edge by a path with `times` new internal vertices."""

    if times < 0:
        raise InvalidParameterError("subdivision count must be non-negative")
    if times == 0:
        return graph
    edges = graph.edges()
    n = graph.n
    new_edges: List[Tuple[int, int]] = []
    for u, v in edges:
        chain = [u] + list(range(n, n + times)) + [v]
        n += times
        new_edges.extend(zip(chain, chain[1:]))
    return build_graph(n, new_edges)


def subdivided_star(legs: int, subdivisions: int) -> Graph:
    """Star with each edge subdivided; legs=3, subdivisions=3 has 13 vertices."""

    return subdivide(star_graph(legs), subdivisions)


def random_tree(n: int, seed: int = 0) -> Graph:
    if n < 1:
        raise InvalidParameterError("tree needs at least 1 vertex")
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return build_graph(n, edges)


def build_cograph(recipe: CographRecipe) -> Graph:
    adj: List[int] = [0]
    for op, target in recipe.steps[1:]:
        v = len(adj)
        neigh = adj[target]
        if op == "true":
            neigh |= 1 << target
        adj.append(0)
        for u in range(v):
            if neigh >> u & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(len(adj), adj)


def build_cactus(recipe: CactusRecipe) -> Graph:
    edges: List[Tuple[int, int]] = []
    n = 0
    for op, at, length in recipe.steps:
        if op == "root-cycle":
            edges.extend((i, (i + 1) % length) for i in range(length))
            n = length
        elif op == "attach-cycle":
            # New cycle of `length` vertices sharing only the vertex `at`.
            ring = [at] + list(range(n, n + length - 1))
            n += length - 1
            edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
        else:  # attach-path
            chain = [at] + list(range(n, n + length))
            n += length
            edges.extend(zip(chain, chain[1:]))
    graph = build_graph(n, edges)
    decomp = block_decomposition(graph)
    for block in decomp.blocks:
        if not _block_is_cycle_or_edge(graph, block):
            raise InvalidParameterError("recipe produced a non-cactus block")
    return graph


def _block_is_cycle_or_edge(graph: Graph, block) -> bool:
    members = block.members()
    k = len(members)
    if k <= 2:
        return True
    inner_degrees = [
        sum(1 for u in members if u != v and graph.has_edge(u, v)) for v in members
    ]
    return all(d == 2 for d in inner_degrees)


def is_cactus(graph: Graph) -> bool:
    """Audit: connected and every block is a cycle or a single edge."""

    if not is_connected(graph):
        return False
    return all(
        _block_is_cycle_or_edge(graph, b) for b in block_decomposition(graph).blocks
    )


def is_block_graph(graph: Graph) -> bool:
    """Audit: connected and every block is a clique."""

    if not is_connected(graph):
        return False
    for block in block_decomposition(graph).blocks:
        members = block.members()
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not graph.has_edge(u, v):
                    return False
    return True


def random_block_graph(n: int, seed: int = 0) -> Graph:
    """Seeded sequence of true-twin and pendant-vertex additions from K1."""

    if n < 1:
        raise InvalidParameterError("block graph needs at least 1 vertex")
    rng = random.Random(seed)
    adj: List[int] = [0]
    cut: set = set()
    while len(adj) < n:
        v = len(adj)
        adj.append(0)
        if rng.random() < 0.5:
            # True twin of a non-cut vertex; twinning a cut vertex would merge
            # its blocks into a non-clique 2-connected component.
            target = rng.choice([u for u in range(v) if u not in cut])
            neigh = adj[target] | 1 << target
            for u in range(v):
                if neigh >> u & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        else:
            # Pendant vertex; its attachment point becomes a cut vertex.
            target = rng.randrange(v)
            adj[target] |= 1 << v
            adj[v] |= 1 << target
            if v >= 2:
                cut.add(target)
    return Graph(n, adj)


def random_cograph_recipe(n: int, seed: int = 0, force_connected: bool = True) -> CographRecipe:
    """Seeded recipe of n splitting steps; optionally forced connected."""

    if n < 1:
        raise InvalidParameterError("cograph needs at least 1 vertex")
    rng = random.Random(seed)
    ops: List[Tuple[str, int]] = [("start", -1)]
    for i in range(1, n):
        if i == 1 and force_connected and n > 1:
            ops.append(("true", 0))
        else:
            ops.append((rng.choice(("true", "false")), rng.randrange(i)))
    recipe = CographRecipe(tuple(ops))
    if force_connected and not is_connected(build_cograph(recipe)):
        # Rare with the forced K2 start; re-seed deterministically.
        return random_cograph_recipe(n, seed + 104729, force_connected)
    return recipe


def random_cactus_recipe(n_steps: int, seed: int = 0) -> CactusRecipe:
    """Seeded cactus: a root cycle plus n_steps random attachments."""

    rng = random.Random(seed)
    steps: List[Tuple[str, int, int]] = [("root-cycle", -1, rng.randrange(3, 7))]
    n = steps[0][2]
    for _ in range(n_steps):
        at = rng.randrange(n)
        if rng.random() < 0.5:
            length = rng.randrange(3, 7)
            steps.append(("attach-cycle", at, length))
            n += length - 1
        else:
            length = rng.randrange(1, 4)
            steps.append(("attach-path", at, length))
            n += length
    return CactusRecipe(tuple(steps))


def generate(spec: FamilySpec) -> Graph:
    """Dispatch a FamilySpec to the matching builder."""

    kind, p = spec.kind, spec.params
    if kind == "path":
        return path_graph(int(p["n"]))
    if kind == "cycle":
        return cycle_graph(int(p["n"]))
    if kind == "complete":
        return complete_graph(int(p["n"]))
    if kind == "complete-multipartite":
        return complete_multipartite_graph([int(x) for x in p["parts"]])
    if kind == "complete-split":
        return complete_split_graph(int(p["independent"]), int(p["clique"]))
    if kind == "star":
        return star_graph(int(p["leaves"]))
    if kind == "subdivided-star":
        return subdivided_star(int(p["legs"]), int(p["subdivisions"]))
    if kind == "random-tree":
        return random_tree(int(p["n"]), spec.seed)
    if kind == "random-block-graph":
        return random_block_graph(int(p["n"]), spec.seed)
    if kind == "cograph":
        recipe = p["recipe"]
        if not isinstance(recipe, CographRecipe):
            raise InvalidParameterError("cograph spec needs a CographRecipe")
        return build_cograph(recipe)
    if kind == "cactus":
        recipe = p["recipe"]
        if not isinstance(recipe, CactusRecipe):
            raise InvalidParameterError("cactus spec needs a CactusRecipe")
        return build_cactus(recipe)
    raise InvalidParameterError(f"unknown family kind {kind!r}")
