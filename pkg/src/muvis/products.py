"""Strong products: construction, tuple indexing, layers, distance law."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .core import (
    CapacityExceededError,
    DistanceMatrix,
    Graph,
    InvalidParameterError,
    MAX_VERTICES,
    VertexSet,
    all_pairs_distances,
    require_connected,
)


@dataclass(frozen=True)
class ProductIndex:
    """Row-major bijection between factor-vertex tuples and product ids.

    The first factor is the slowest-varying coordinate.
    """

    factor_orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.factor_orders or any(n < 1 for n in self.factor_orders):
            raise InvalidParameterError("factor orders must be positive")

    @property
    def size(self) -> int:
        total = 1
        for n in self.factor_orders:
            total *= n
        return total

    @property
    def strides(self) -> Tuple[int, ...]:
        strides = [1] * len(self.factor_orders)
        for i in range(len(self.factor_orders) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.factor_orders[i + 1]
        return tuple(strides)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factor_orders):
            raise InvalidParameterError("wrong tuple arity")
        out = 0
        for c, n, s in zip(coords, self.factor_orders, self.strides):
            if not 0 <= c < n:
                raise InvalidParameterError(f"coordinate {c} out of range [0, {n})")
            out += c * s
        return out

    def decode(self, vid: int) -> Tuple[int, ...]:
        if not 0 <= vid < self.size:
            raise InvalidParameterError(f"vertex id {vid} out of range")
        coords = []
        for s in self.strides:
            coords.append(vid // s)
            vid %= s
        return tuple(coords)


def _check_capacity(total: int) -> None:
    if total > MAX_VERTICES:
        raise CapacityExceededError(
            f"product would have {total} vertices, above the {MAX_VERTICES} capacity"
        )


def strong_product(g: Graph, h: Graph) -> Tuple[Graph, ProductIndex]:
    """G boxtimes H: move along an edge in either factor, or both at once."""

    if g.n == 0 or h.n == 0:
        raise InvalidParameterError("strong product factors must be nonempty")
    return strong_product_multi([g, h])


def strong_product_multi(factors: Sequence[Graph]) -> Tuple[Graph, ProductIndex]:
    """Associative k-ary strong product with a row-major index."""

    if not factors:
        raise InvalidParameterError("need at least one factor")
    if any(f.n == 0 for f in factors):
        raise InvalidParameterError("strong product factors must be nonempty")
    index = ProductIndex(tuple(f.n for f in factors))
    total = index.size
    _check_capacity(total)

    # Closed neighborhoods per factor; tuples are adjacent iff every
    # coordinate stays in the closed neighborhood and the tuples differ.
    closed = [[f.adj[v] | (1 << v) for v in range(f.n)] for f in factors]
    coords = [index.decode(i) for i in range(total)]
    adj = [0] * total
    for i in range(total):
        ci = coords[i]
        for j in range(i + 1, total):
            cj = coords[j]
            if all(closed[k][ci[k]] >> cj[k] & 1 for k in range(len(factors))):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(total, adj), index


def layer(index: ProductIndex, fixed: Dict[int, int], free_position: int) -> VertexSet:
    """Product vertices agreeing with `fixed` everywhere but one coordinate."""

    k = len(index.factor_orders)
    if not 0 <= free_position < k:
        raise InvalidParameterError(f"free position {free_position} out of range")
    expected = set(range(k)) - {free_position}
    if set(fixed) != expected:
        raise InvalidParameterError("fixed tuple must assign exactly the other coordinates")
    for pos, val in fixed.items():
        if not 0 <= val < index.factor_orders[pos]:
            raise InvalidParameterError(f"coordinate {val} out of range at position {pos}")
    mask = 0
    coords = [fixed.get(p, 0) for p in range(k)]
    for free_val in range(index.factor_orders[free_position]):
        coords[free_position] = free_val
        mask |= 1 << index.encode(coords)
    return VertexSet(index.size, mask)


def check_distance_law(
    g: Graph,
    h: Graph,
    product: Graph,
    index: ProductIndex,
    product_dist: DistanceMatrix | None = None,
) -> bool:
    """Verify d((g,h),(g',h')) = max(d_G, d_H) over all pairs."""

    require_connected(g)
    require_connected(h)
    dg = all_pairs_distances(g)
    dh = all_pairs_distances(h)
    dp = product_dist if product_dist is not None else all_pairs_distances(product)
    for i in range(product.n):
        gi, hi = index.decode(i)
        for j in range(product.n):
            gj, hj = index.decode(j)
            if dp.d(i, j) != max(dg.d(gi, gj), dh.d(hi, hj)):
                return False
    return True
