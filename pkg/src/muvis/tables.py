"""Named experiments: formula vs. solver tables used by the CLI and service."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .constructions import (
    block_graph_mu_set,
    classify_cactus,
    classify_cograph,
    cycle_prism_mu,
    grid_cover_parts,
    grid_extremal_set,
    hull_cover_upper_bound,
)
from .core import Graph, InvalidParameterError
from .families import (
    build_cactus,
    build_cograph,
    cycle_graph,
    path_graph,
    random_block_graph,
    random_cactus_recipe,
    random_cograph_recipe,
)
from .products import strong_product
from .visibility import SolveOptions, mu_exact, mu_total_exact

EXPERIMENTS = (
    "cycle-prism",
    "grid-2d",
    "grid-3d",
    "block-prism",
    "cograph-audit",
    "cactus-audit",
    "prism-open-question",
)

Row = Dict[str, object]
Table = Tuple[List[str], List[Row]]


def cycle_prism_table(
    n_min: int = 3, n_max: int = 8, options: SolveOptions = SolveOptions()
) -> Table:
    headers = ["n", "formula", "solver", "match"]
    rows: List[Row] = []
    for n in range(n_min, n_max + 1):
        product, _ = strong_product(cycle_graph(n), path_graph(2))
        result = mu_exact(product, options)
        formula = cycle_prism_mu(n)
        rows.append(
            {
                "n": n,
                "formula": formula,
                "solver": result.value if result.exact else f">={result.value}",
                "match": result.exact and result.value == formula,
            }
        )
    return headers, rows


def grid_2d_table(
    n_min: int = 3, n_max: int = 5, options: SolveOptions = SolveOptions()
) -> Table:
    headers = ["m", "n", "formula", "solver", "match"]
    rows: List[Row] = []
    for m in range(n_min, n_max + 1):
        for n in range(n_min, n_max + 1):
            product, _ = strong_product(path_graph(m), path_graph(n))
            result = mu_exact(product, options)
            formula = 2 * m + 2 * n - 4
            rows.append(
                {
                    "m": m,
                    "n": n,
                    "formula": formula,
                    "solver": result.value if result.exact else f">={result.value}",
                    "match": result.exact and result.value == formula,
                }
            )
    return headers, rows


def grid_3d_table(n_min: int = 3, n_max: int = 4) -> Table:
    """Boundary-set size vs. the closed formula; exact solve not attempted."""

    headers = ["dims", "formula", "boundary", "hull_bound", "match"]
    rows: List[Row] = []
    for a in range(n_min, n_max + 1):
        for b in range(a, n_max + 1):
            for c in range(b, n_max + 1):
                result, cover = grid_extremal_set((a, b, c))
                formula = (
                    2 * (a * b + a * c + b * c) - 4 * (a + b + c) + 8
                )
                bound = hull_cover_upper_bound(
                    result.graph, grid_cover_parts(result.graph, cover)
                )
                rows.append(
                    {
                        "dims": f"{a}x{b}x{c}",
                        "formula": formula,
                        "boundary": result.certificate.size,
                        "hull_bound": bound,
                        "match": result.certificate.size == formula == bound,
                    }
                )
    return headers, rows


def block_prism_table(
    count: int = 10, max_n: int = 8, seed: int = 0, options: SolveOptions = SolveOptions()
) -> Table:
    headers = ["seed", "n", "formula", "solver", "match"]
    rows: List[Row] = []
    for i in range(count):
        g = random_block_graph(3 + (seed + i) % (max_n - 2), seed + i)
        mu_g = block_graph_mu_set(g).size
        formula = g.n + mu_g
        product, _ = strong_product(g, path_graph(2))
        result = mu_exact(product, options)
        rows.append(
            {
                "seed": seed + i,
                "n": g.n,
                "formula": formula,
                "solver": result.value if result.exact else f">={result.value}",
                "match": result.exact and result.value == formula,
            }
        )
    return headers, rows


def cograph_audit_table(count: int = 10, max_n: int = 8, seed: int = 0) -> Table:
    headers = ["seed", "n", "verdict", "mu", "mut", "match"]
    rows: List[Row] = []
    for i in range(count):
        n = 2 + (seed + i) % (max_n - 1)
        recipe = random_cograph_recipe(n, seed + i)
        g = build_cograph(recipe)
        cls = classify_cograph(recipe)
        mu = mu_exact(g).value
        mut = mu_total_exact(g).value
        verdict = bool(cls.verdicts["is_mu_mut_graph"])
        rows.append(
            {
                "seed": seed + i,
                "n": g.n,
                "verdict": verdict,
                "mu": mu,
                "mut": mut,
                "match": verdict == (mu == mut) and cls.verdicts["mu"] == mu,
            }
        )
    return headers, rows


def cactus_audit_table(count: int = 10, max_n: int = 12, seed: int = 0) -> Table:
    headers = ["seed", "n", "verdict", "mut", "match"]
    rows: List[Row] = []
    produced = 0
    attempt = 0
    while produced < count:
        recipe = random_cactus_recipe(1 + (seed + attempt) % 3, seed + attempt)
        attempt += 1
        g = build_cactus(recipe)
        if g.n > max_n:
            continue
        produced += 1
        cls = classify_cactus(g)
        mut = mu_total_exact(g).value
        verdict = bool(cls.verdicts["mut_zero"])
        rows.append(
            {
                "seed": seed + attempt - 1,
                "n": g.n,
                "verdict": verdict,
                "mut": mut,
                "match": verdict == (mut == 0),
            }
        )
    return headers, rows


def prism_open_question_table(
    count: int = 10, max_n: int = 8, seed: int = 0, options: SolveOptions = SolveOptions()
) -> Table:
    """mu(G x P2) vs mu(G) + n(G) over block graphs; reported, not asserted."""

    headers = ["seed", "n", "lower_bound", "solver", "match"]
    rows: List[Row] = []
    for i in range(count):
        g = random_block_graph(3 + (seed + i) % (max_n - 2), seed + i)
        mu_g = mu_exact(g).value
        bound = mu_g + g.n
        product, _ = strong_product(g, path_graph(2))
        result = mu_exact(product, options)
        rows.append(
            {
                "seed": seed + i,
                "n": g.n,
                "lower_bound": bound,
                "solver": result.value if result.exact else f">={result.value}",
                "match": result.exact and result.value == bound,
            }
        )
    return headers, rows


def run_experiment(
    name: str,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
    count: Optional[int] = None,
    seed: int = 0,
    options: SolveOptions = SolveOptions(),
) -> Table:
    if name == "cycle-prism":
        return cycle_prism_table(n_min or 3, n_max or 8, options)
    if name == "grid-2d":
        return grid_2d_table(n_min or 3, n_max or 5, options)
    if name == "grid-3d":
        return grid_3d_table(n_min or 3, n_max or 4)
    if name == "block-prism":
        return block_prism_table(count or 10, n_max or 8, seed, options)
    if name == "cograph-audit":
        return cograph_audit_table(count or 10, n_max or 8, seed)
    if name == "cactus-audit":
        return cactus_audit_table(count or 10, n_max or 12, seed)
    if name == "prism-open-question":
        return prism_open_question_table(count or 10, n_max or 8, seed, options)
    raise InvalidParameterError(f"unknown experiment {name!r}")


def render_table(headers: Sequence[str], rows: Sequence[Row], fmt: str = "text") -> str:
    if fmt == "csv":
        lines = [",".join(headers)]
        lines += [",".join(str(row[h]) for h in headers) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise InvalidParameterError(f"unknown table format {fmt!r}")
    widths = [
        max(len(h), *(len(str(row[h])) for row in rows)) if rows else len(h)
        for h in headers
    ]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for row in rows:
        out.append("  ".join(str(row[h]).ljust(w) for h, w in zip(headers, widths)))
    return "\n".join(out) + "\n"
