"""Command-line surface; a thin client over the library.

Exit codes: 0 success/verified, 1 verification failure, 2 usage or parse
error, 3 budget exceeded (best-known lower bound emitted, flagged inexact).
"""

from __future__ import annotations

import sys
from typing import List, Optional, Sequence, Tuple

import click

from . import constructions, families, io, products, tables, visibility
from .core import Graph, MuvisError, VertexSet, all_pairs_distances

EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _fail(message: str, code: int = EXIT_USAGE) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_graph(path: str) -> Graph:
    try:
        return io.load_graph(path)
    except (OSError, MuvisError) as exc:
        _fail(str(exc))
        raise AssertionError  # unreachable


def _parse_recipe_file(path: str, family: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [
                ln.strip()
                for ln in fh
                if ln.strip() and not ln.strip().startswith("#")
            ]
    except OSError as exc:
        _fail(str(exc))
    try:
        if family == "cograph":
            ops: List[Tuple[str, int]] = []
            for ln in lines:
                parts = ln.split()
                if parts[0] == "start":
                    ops.append(("start", -1))
                else:
                    ops.append((parts[0], int(parts[1])))
            return families.CographRecipe(tuple(ops))
        steps: List[Tuple[str, int, int]] = []
        for ln in lines:
            parts = ln.split()
            if parts[0] == "root-cycle":
                steps.append(("root-cycle", -1, int(parts[1])))
            else:
                steps.append((parts[0], int(parts[1]), int(parts[2])))
        return families.CactusRecipe(tuple(steps))
    except (IndexError, ValueError, MuvisError) as exc:
        _fail(f"bad recipe file: {exc}")


def _solve_options(
    node_budget: Optional[int],
    time_budget: Optional[float],
    oracle_limit: int,
    threads: int,
) -> visibility.SolveOptions:
    return visibility.SolveOptions(
        node_budget=node_budget,
        time_budget=time_budget,
        oracle_limit=oracle_limit,
        threads=threads,
    )


@click.group()
def main() -> None:
    """Mutual-visibility toolkit for strong products of graphs."""


@main.command("gen")
@click.option("--family", required=True, type=click.Choice(families.FAMILY_KINDS))
@click.option("--n", type=int, default=None)
@click.option("--parts", type=str, default=None, help="comma-separated part sizes")
@click.option("--independent", type=int, default=None)
@click.option("--clique", type=int, default=None)
@click.option("--leaves", type=int, default=None)
@click.option("--legs", type=int, default=None)
@click.option("--subdivisions", type=int, default=None)
@click.option("--recipe", type=str, default=None, help="recipe file for cograph/cactus")
@click.option("--seed", type=int, default=0)
@click.option("--out", type=str, default=None)
def cmd_gen(family, n, parts, independent, clique, leaves, legs, subdivisions, recipe, seed, out):
    """Generate a family member and write it as an edge list."""

    params = {}
    if n is not None:
        params["n"] = n
    if parts is not None:
        params["parts"] = [int(p) for p in parts.split(",")]
    if independent is not None:
        params["independent"] = independent
    if clique is not None:
        params["clique"] = clique
    if leaves is not None:
        params["leaves"] = leaves
    if legs is not None:
        params["legs"] = legs
    if subdivisions is not None:
        params["subdivisions"] = subdivisions
    if recipe is not None:
        params["recipe"] = _parse_recipe_file(recipe, family)
    try:
        graph = families.generate(families.FamilySpec(family, params, seed))
    except (KeyError, MuvisError) as exc:
        _fail(f"invalid family spec: {exc}")
    if out:
        io.save_graph(graph, out, comments=[f"family={family} seed={seed}"])
    else:
        click.echo(io.graph_to_edge_list_text(graph), nl=False)
    click.echo(f"n={graph.n} m={graph.m}")


@main.command("product")
@click.option("--factors", required=True, type=str, help="comma-separated edge-list files")
@click.option("--out", type=str, default=None)
def cmd_product(factors, out):
    """Strong product of two or more edge-list graphs."""

    paths = [p for p in factors.split(",") if p]
    if len(paths) < 2:
        _fail("need at least 2 factor files")
    graphs = [_load_graph(p) for p in paths]
    try:
        product, index = products.strong_product_multi(graphs)
    except MuvisError as exc:
        _fail(str(exc))
    if out:
        io.save_graph(product, out, comments=["strong product, row-major ids"])
    else:
        click.echo(io.graph_to_edge_list_text(product), nl=False)
    click.echo(f"n={product.n} m={product.m}")
    click.echo(
        "index: row-major over factor orders "
        + "x".join(str(o) for o in index.factor_orders)
        + " (first factor slowest-varying)"
    )


@main.command("mu")
@click.option("--graph", "graph_path", required=True, type=str)
@click.option("--kind", type=click.Choice(["mv", "tmv"]), default="mv")
@click.option("--solver", type=click.Choice(["bnb", "brute", "heuristic"]), default="bnb")
@click.option("--out", type=str, default=None, help="certificate file to write")
@click.option("--node-budget", type=int, default=None)
@click.option("--time-budget", type=float, default=None)
@click.option("--oracle-limit", type=int, default=18)
@click.option("--threads", type=int, default=1)
@click.option("--seed", type=int, default=0)
def cmd_mu(graph_path, kind, solver, out, node_budget, time_budget, oracle_limit, threads, seed):
    """Compute mu / mu_t with a certificate."""

    graph = _load_graph(graph_path)
    options = _solve_options(node_budget, time_budget, oracle_limit, threads)
    try:
        if solver == "brute":
            result = visibility.brute_force_mu(graph, kind, oracle_limit)
        elif solver == "heuristic":
            if kind != "mv":
                _fail("the heuristic solver only supports --kind mv")
            cert = visibility.mu_heuristic(
                graph, time_budget if time_budget else 10.0, seed
            )
            result = visibility.SolveResult(
                value=cert.size,
                certificate=cert,
                nodes_explored=0,
                elapsed=0.0,
                exact=False,
            )
        else:
            result = visibility.solve_exact(graph, kind, options)
    except MuvisError as exc:
        _fail(str(exc))
    metadata = {
        "solver": solver,
        "seed": seed,
        "node_budget": node_budget,
        "time_budget": time_budget,
        "threads": threads,
        "nodes_explored": result.nodes_explored,
        "elapsed": result.elapsed,
        "exact": result.exact,
    }
    if out:
        doc = io.make_certificate_document(
            graph, kind, result.certificate.vertices, True, metadata=metadata
        )
        io.save_certificate(doc, out)
    exact_note = "" if result.exact else " (inexact lower bound: budget exceeded)"
    click.echo(
        f"value={result.value} nodes={result.nodes_explored} "
        f"time={result.elapsed:.3f}s{exact_note}"
    )
    if not result.exact and solver == "bnb":
        sys.exit(EXIT_BUDGET)


@main.command("check")
@click.option("--graph", "graph_path", type=str, default=None)
@click.option("--cert", "cert_path", required=True, type=str)
def cmd_check(graph_path, cert_path):
    """Verify a certificate file; exit 0 iff the claimed kind verifies."""

    import os

    try:
        doc = io.load_certificate(cert_path)
        if graph_path:
            graph = io.load_graph(graph_path)
        else:
            graph = doc.resolve_graph(os.path.dirname(cert_path) or ".")
        vertices = VertexSet.from_iterable(graph.n, doc.vertices)
    except (OSError, MuvisError) as exc:
        _fail(str(exc))
    dist = all_pairs_distances(graph)
    try:
        ok = visibility.check_set(graph, dist, vertices, doc.kind)
    except MuvisError as exc:
        _fail(str(exc))
    if ok:
        click.echo(f"verified: {doc.kind} set of size {len(vertices)}")
    else:
        click.echo(f"FAILED: set is not a valid {doc.kind} set", err=True)
        sys.exit(EXIT_VERIFY_FAIL)


THEOREMS = ("thm4.1", "cor4.2", "thm4.4", "cor4.5", "thm4.6", "thm5.1", "thm5.4", "blockmu")


def _parse_sets(text: str, graphs: Sequence[Graph]) -> List[VertexSet]:
    chunks = text.split(";")
    if len(chunks) != len(graphs):
        _fail("need one vertex set per factor (semicolon-separated)")
    out = []
    for chunk, graph in zip(chunks, graphs):
        ids = [int(x) for x in chunk.split(",") if x != ""]
        out.append(VertexSet.from_iterable(graph.n, ids))
    return out


def _auto_feasible_sets(graphs: Sequence[Graph], oracle_limit: int) -> List[VertexSet]:
    sets = []
    for graph in graphs:
        if graph.n > oracle_limit:
            _fail(
                f"factor with {graph.n} vertices exceeds the oracle limit; "
                "supply --sets explicitly"
            )
        sets.append(visibility.max_feasible_tmv(graph).certificate.vertices)
    return sets


@main.command("construct")
@click.option("--theorem", required=True, type=click.Choice(THEOREMS))
@click.option("--graph", "graph_path", type=str, default=None)
@click.option("--factors", type=str, default=None, help="comma-separated edge-list files")
@click.option("--sets", type=str, default=None, help="per-factor vertex ids, ';'-separated")
@click.option("--dims", type=str, default=None, help="path lengths, comma-separated")
@click.option("--oracle-limit", type=int, default=18)
@click.option("--out", type=str, default=None)
def cmd_construct(theorem, graph_path, factors, sets, dims, oracle_limit, out):
    """Run a constructive builder and emit its verified certificate."""

    try:
        if theorem in ("thm4.1", "cor4.2", "thm4.6", "cor4.5"):
            if not factors:
                _fail(f"--theorem {theorem} needs --factors")
            graphs = [_load_graph(p) for p in factors.split(",") if p]
            if theorem == "cor4.5":
                result = constructions.universal_product_tmv(graphs)
            elif theorem == "thm4.6":
                if len(graphs) != 2:
                    _fail("thm4.6 needs exactly 2 factors")
                if sets:
                    set_list = _parse_sets(sets, graphs)
                else:
                    set_list = [
                        visibility.mu_exact(g).certificate.vertices for g in graphs
                    ]
                result = constructions.product_mv_set(
                    graphs[0], set_list[0], graphs[1], set_list[1]
                )
            else:
                set_list = (
                    _parse_sets(sets, graphs)
                    if sets
                    else _auto_feasible_sets(graphs, oracle_limit)
                )
                if theorem == "thm4.1":
                    if len(graphs) != 2:
                        _fail("thm4.1 needs exactly 2 factors")
                    result = constructions.product_tmv_set(
                        graphs[0], set_list[0], graphs[1], set_list[1]
                    )
                else:
                    result = constructions.multiway_tmv_set(graphs, set_list)
        elif theorem == "thm4.4":
            if not dims:
                _fail("--theorem thm4.4 needs --dims")
            lengths = [int(x) for x in dims.split(",")]
            result, _cover = constructions.grid_extremal_set(lengths)
        elif theorem in ("thm5.1", "thm5.4", "blockmu"):
            if not graph_path:
                _fail(f"--theorem {theorem} needs --graph")
            graph = _load_graph(graph_path)
            if theorem == "thm5.1":
                result = constructions.prism_layer_set(graph)
            elif theorem == "thm5.4":
                result = constructions.block_prism_set(graph)
            else:
                cert = constructions.block_graph_mu_set(graph)
                result = constructions.ConstructionResult(graph, None, cert, cert.size)
        else:  # pragma: no cover
            _fail(f"unknown theorem {theorem}")
    except MuvisError as exc:
        _fail(str(exc))
    cert = result.certificate
    if out:
        doc = io.make_certificate_document(
            result.graph,
            cert.kind,
            cert.vertices,
            cert.verified,
            index=result.index,
            metadata={"theorem": theorem, "formula_value": result.formula_value},
        )
        io.save_certificate(doc, out)
    click.echo(
        f"theorem={theorem} kind={cert.kind} size={cert.size} "
        f"formula={result.formula_value} verified={cert.verified}"
    )


@main.command("table")
@click.option("--experiment", required=True, type=click.Choice(tables.EXPERIMENTS))
@click.option("--min", "n_min", type=int, default=None)
@click.option("--max", "n_max", type=int, default=None)
@click.option("--count", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--format", "fmt", type=click.Choice(["text", "csv"]), default="text")
@click.option("--node-budget", type=int, default=None)
@click.option("--time-budget", type=float, default=None)
@click.option("--threads", type=int, default=1)
def cmd_table(experiment, n_min, n_max, count, seed, fmt, node_budget, time_budget, threads):
    """Run a named experiment and print its table."""

    options = _solve_options(node_budget, time_budget, 18, threads)
    try:
        headers, rows = tables.run_experiment(
            experiment, n_min, n_max, count, seed, options
        )
    except MuvisError as exc:
        _fail(str(exc))
    click.echo(tables.render_table(headers, rows, fmt), nl=False)


@main.command("export")
@click.option("--graph", "graph_path", required=True, type=str)
@click.option("--format", "fmt", type=click.Choice(["dot"]), default="dot")
@click.option("--highlight", type=str, default=None, help="certificate file")
@click.option("--dims", type=str, default=None, help="factor orders for tuple labels")
@click.option("--out", type=str, default=None)
def cmd_export(graph_path, fmt, highlight, dims, out):
    """Export a graph as DOT, optionally highlighting a certificate."""

    graph = _load_graph(graph_path)
    highlight_set = None
    if highlight:
        try:
            doc = io.load_certificate(highlight)
            highlight_set = VertexSet.from_iterable(graph.n, doc.vertices)
        except (OSError, MuvisError) as exc:
            _fail(str(exc))
    index = None
    if dims:
        try:
            index = products.ProductIndex(tuple(int(x) for x in dims.split(",")))
            if index.size != graph.n:
                _fail("--dims does not match the graph order")
        except (ValueError, MuvisError) as exc:
            _fail(str(exc))
    text = io.to_dot(graph, highlight_set, index)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("serve")
@click.option("--host", type=str, default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def cmd_serve(host, port):
    """Run the HTTP service."""

    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
