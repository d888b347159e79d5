"""Constructive set builders and classifiers, each returning verified output.

Every builder validates its hypotheses up front and re-verifies the set it
produces with the matching checker before wrapping it in a certificate, so
nothing unverified ever leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import (
    DistanceMatrix,
    Graph,
    MuvisError,
    VertexSet,
    all_pairs_distances,
    block_decomposition,
    convex_hull,
    enabling_vertices,
    induced_subgraph,
    is_connected,
    require_connected,
    universal_vertices,
)
from .families import is_block_graph, is_cactus, path_graph, CographRecipe, build_cograph
from .products import ProductIndex, strong_product, strong_product_multi, layer
from .visibility import (
    Certificate,
    SolveOptions,
    is_feasible_tmv_set,
    is_mv_set,
    make_certificate,
    mu_exact,
)


class HypothesisError(MuvisError):
    """A construction's hypothesis failed validation."""


@dataclass(frozen=True)
class ConstructionResult:
    """A verified certificate on a product graph, with its formula value."""

    graph: Graph
    index: Optional[ProductIndex]
    certificate: Certificate
    formula_value: int


@dataclass(frozen=True)
class GridDiagonalCover:
    """Diagonal convex cover of a strong grid: I, T, D and the diagonals.

    Coordinates are 0-based; the extreme values of coordinate i are 0 and
    n_i - 1.
    """

    initial_set: VertexSet
    terminal_set: VertexSet
    degenerate_set: VertexSet
    diagonals: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Classification:
    family: str
    verdicts: Dict[str, Union[bool, int]]


def _validate_feasible(graph: Graph, s: VertexSet, name: str) -> DistanceMatrix:
    require_connected(graph)
    dist = all_pairs_distances(graph)
    if not is_feasible_tmv_set(graph, dist, s):
        raise HypothesisError(f"{name} is not a feasible total mutual-visibility set")
    return dist


def product_tmv_set(
    g: Graph, s_g: VertexSet, h: Graph, s_h: VertexSet
) -> ConstructionResult:
    """Feasible tmv set of the strong product from feasible tmv factor sets.

    The set keeps every product vertex except those whose both coordinates
    avoid the factor sets.
    """

    if g.n < 2 or h.n < 2:
        raise HypothesisError("both factors must be non-trivial")
    _validate_feasible(g, s_g, "first factor set")
    _validate_feasible(h, s_h, "second factor set")
    product, index = strong_product(g, h)
    mask = 0
    for i in range(product.n):
        a, b = index.decode(i)
        if a in s_g or b in s_h:
            mask |= 1 << i
    size = len(s_g) * h.n + len(s_h) * g.n - len(s_g) * len(s_h)
    vertices = VertexSet(product.n, mask)
    assert len(vertices) == size
    dist = all_pairs_distances(product)
    cert = make_certificate(product, dist, vertices, "feasible-tmv")
    return ConstructionResult(product, index, cert, size)


def multiway_tmv_set(
    factors: Sequence[Graph], sets: Sequence[VertexSet]
) -> ConstructionResult:
    """Multiway version: drop product vertices with every coordinate outside."""

    if len(factors) < 2 or len(factors) != len(sets):
        raise HypothesisError("need k >= 2 factors, one set per factor")
    for idx, (f, s) in enumerate(zip(factors, sets)):
        if f.is_complete():
            raise HypothesisError(f"factor {idx} is complete")
        _validate_feasible(f, s, f"factor {idx} set")
    product, index = strong_product_multi(factors)
    mask = 0
    for i in range(product.n):
        coords = index.decode(i)
        if any(c in s for c, s in zip(coords, sets)):
            mask |= 1 << i
    size = index.size
    hole = 1
    for f, s in zip(factors, sets):
        hole *= f.n - len(s)
    size -= hole
    vertices = VertexSet(product.n, mask)
    assert len(vertices) == size
    dist = all_pairs_distances(product)
    cert = make_certificate(product, dist, vertices, "feasible-tmv")
    return ConstructionResult(product, index, cert, size)


def grid_extremal_set(
    path_lengths: Sequence[int],
) -> Tuple[ConstructionResult, GridDiagonalCover]:
    """Boundary set of a strong grid plus its certifying diagonal cover."""

    if len(path_lengths) < 2:
        raise HypothesisError("need at least 2 path factors")
    if any(n < 3 for n in path_lengths):
        raise HypothesisError("every path must have at least 3 vertices")
    factors = [path_graph(n) for n in path_lengths]
    product, index = strong_product_multi(factors)
    dims = tuple(path_lengths)
    k = len(dims)

    ext_mask = 0
    i_mask = 0
    d_mask = 0
    for vid in range(product.n):
        coords = index.decode(vid)
        has_low = any(c == 0 for c in coords)
        has_high = any(c == dims[j] - 1 for j, c in enumerate(coords))
        if has_low or has_high:
            ext_mask |= 1 << vid
        if has_low and has_high:
            d_mask |= 1 << vid
        elif has_low:
            i_mask |= 1 << vid

    t_mask = 0
    diagonals: List[Tuple[int, ...]] = []
    for vid in sorted(VertexSet(product.n, i_mask)):
        coords = index.decode(vid)
        steps = min(dims[j] - 1 - c for j, c in enumerate(coords))
        diag = tuple(
            index.encode([c + t for c in coords]) for t in range(steps + 1)
        )
        diagonals.append(diag)
        t_mask |= 1 << diag[-1]

    assert i_mask | t_mask | d_mask == ext_mask
    size = 1
    interior = 1
    for n in dims:
        size *= n
        interior *= n - 2
    size -= interior
    vertices = VertexSet(product.n, ext_mask)
    assert len(vertices) == size
    dist = all_pairs_distances(product)
    cert = make_certificate(product, dist, vertices, "feasible-tmv")
    cover = GridDiagonalCover(
        initial_set=VertexSet(product.n, i_mask),
        terminal_set=VertexSet(product.n, t_mask),
        degenerate_set=VertexSet(product.n, d_mask),
        diagonals=tuple(diagonals),
    )
    return ConstructionResult(product, index, cert, size), cover


def grid_cover_parts(product: Graph, cover: GridDiagonalCover) -> List[VertexSet]:
    """Cover of the grid's vertices by diagonals and degenerate singletons."""

    parts = [
        VertexSet.from_iterable(product.n, diag) for diag in cover.diagonals
    ]
    parts += [VertexSet.from_iterable(product.n, [v]) for v in cover.degenerate_set]
    return parts


def hull_cover_upper_bound(
    graph: Graph, cover: Sequence[VertexSet], options: SolveOptions = SolveOptions()
) -> int:
    """Sum of exact mu over the convex hulls of a vertex cover."""

    require_connected(graph)
    union = 0
    for part in cover:
        union |= part.mask
    if union != (1 << graph.n) - 1:
        raise HypothesisError("cover does not cover all vertices")
    dist = all_pairs_distances(graph)
    bound = 0
    for part in cover:
        hull = convex_hull(graph, dist, part)
        sub, _ = induced_subgraph(graph, hull)
        bound += mu_exact(sub, options).value
    return bound


def product_mv_set(
    g: Graph, s_g: VertexSet, h: Graph, s_h: VertexSet
) -> ConstructionResult:
    """Cartesian-set product of factor mv sets, verified on the strong product."""

    require_connected(g)
    require_connected(h)
    if not is_mv_set(g, all_pairs_distances(g), s_g):
        raise HypothesisError("first factor set is not a mutual-visibility set")
    if not is_mv_set(h, all_pairs_distances(h), s_h):
        raise HypothesisError("second factor set is not a mutual-visibility set")
    product, index = strong_product(g, h)
    mask = 0
    for a in s_g:
        for b in s_h:
            mask |= 1 << index.encode((a, b))
    vertices = VertexSet(product.n, mask)
    dist = all_pairs_distances(product)
    cert = make_certificate(product, dist, vertices, "mv")
    return ConstructionResult(product, index, cert, len(s_g) * len(s_h))


def prism_layer_set(g: Graph) -> ConstructionResult:
    """One full G-layer of the strong prism, verified mv."""

    require_connected(g)
    product, index = strong_product(g, path_graph(2))
    vertices = layer(index, {1: 0}, 0)
    dist = all_pairs_distances(product)
    cert = make_certificate(product, dist, vertices, "mv")
    return ConstructionResult(product, index, cert, g.n)


def block_prism_set(g: Graph) -> ConstructionResult:
    """Two copies of each non-cut vertex, one copy of each cut vertex."""

    if not is_block_graph(g):
        raise HypothesisError("input is not a connected block graph")
    cut = block_decomposition(g).cut_vertices
    product, index = strong_product(g, path_graph(2))
    mask = 0
    for v in range(g.n):
        mask |= 1 << index.encode((v, 0))
        if v not in cut:
            mask |= 1 << index.encode((v, 1))
    vertices = VertexSet(product.n, mask)
    dist = all_pairs_distances(product)
    cert = make_certificate(product, dist, vertices, "mv")
    return ConstructionResult(product, index, cert, g.n + (g.n - len(cut)))


def block_graph_mu_set(g: Graph) -> Certificate:
    """Non-cut vertices of a block graph: simultaneously a mu- and mut-set."""

    if not is_block_graph(g):
        raise HypothesisError("input is not a connected block graph")
    cut = block_decomposition(g).cut_vertices
    vertices = cut.complement()
    dist = all_pairs_distances(g)
    return make_certificate(g, dist, vertices, "tmv")


def classify_cograph(recipe: CographRecipe) -> Classification:
    """(mu, mut)-graph verdict for a recipe-built connected cograph.

    The verdict holds iff the graph has a universal vertex or no enabling
    vertices; the reported mu follows from the enabling-vertex dichotomy
    and the cograph lower bound mu >= n - 2.
    """

    g = build_cograph(recipe)
    if not is_connected(g):
        raise HypothesisError("recipe builds a disconnected cograph")
    n = g.n
    universal = universal_vertices(g)
    if n == 1:
        return Classification(
            "cograph",
            {"is_mu_mut_graph": True, "mu": 1, "mut": 1,
             "has_universal": True, "has_enabling": True},
        )
    enabling = enabling_vertices(g)
    has_universal = bool(universal)
    has_enabling = bool(enabling)
    is_mu_mut = has_universal or not has_enabling
    if g.is_complete():
        mu = n
    elif has_universal or has_enabling:
        mu = n - 1
    else:
        mu = n - 2
    verdicts: Dict[str, Union[bool, int]] = {
        "is_mu_mut_graph": is_mu_mut,
        "mu": mu,
        "has_universal": has_universal,
        "has_enabling": has_enabling,
    }
    if is_mu_mut:
        verdicts["mut"] = mu
    return Classification("cograph", verdicts)


def classify_cactus(g: Graph) -> Classification:
    """mut-zero verdict for a connected cactus."""

    if not is_cactus(g):
        raise HypothesisError("input is not a connected cactus")
    min_degree = min(g.degree(v) for v in range(g.n)) if g.n else 0
    mut_zero = min_degree >= 2
    if mut_zero:
        for block in block_decomposition(g).blocks:
            members = block.members()
            if 3 <= len(members) <= 4:
                if any(g.degree(v) < 3 for v in members):
                    mut_zero = False
                    break
    return Classification(
        "cactus", {"mut_zero": mut_zero, "min_degree": min_degree}
    )


def cycle_prism_mu(n: int) -> int:
    """Closed-form mu of the strong prism over an n-cycle."""

    if n < 3:
        raise HypothesisError("cycle length must be at least 3")
    if n <= 5:
        return 6
    if n == 6:
        return 7
    return n


def universal_product_tmv(factors: Sequence[Graph]) -> ConstructionResult:
    """Product minus one vertex, for non-complete factors with universal vertices."""

    if not factors:
        raise HypothesisError("need at least one factor")
    sets: List[VertexSet] = []
    for idx, f in enumerate(factors):
        require_connected(f)
        if f.is_complete():
            raise HypothesisError(f"factor {idx} is complete")
        universal = universal_vertices(f)
        if not universal:
            raise HypothesisError(f"factor {idx} has no universal vertex")
        sets.append(f.full_set().remove(min(universal)))
    if len(factors) == 1:
        raise HypothesisError("need at least 2 factors for the product")
    result = multiway_tmv_set(factors, sets)
    expected = 1
    for f in factors:
        expected *= f.n
    expected -= 1
    assert result.formula_value == expected
    return result
