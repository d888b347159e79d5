"""FastAPI service wrapping the core package."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import constructions, families, tables, visibility
from ..core import Graph, MuvisError, VertexSet, all_pairs_distances, build_graph
from ..products import strong_product_multi
from .schemas import (
    CertificateModel,
    CheckRequest,
    CheckResponse,
    ClassifyCactusRequest,
    ClassifyCographRequest,
    ClassifyResponse,
    ConstructRequest,
    GenerateRequest,
    GraphModel,
    ProductRequest,
    ProductResponse,
    SolveRequest,
    SolveResponse,
    TableRequest,
    TableResponse,
)

app = FastAPI(title="muvis", description="Mutual-visibility in strong products")


def _to_graph(model: GraphModel) -> Graph:
    try:
        return build_graph(model.n, model.edges)
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _to_model(graph: Graph) -> GraphModel:
    return GraphModel(n=graph.n, edges=graph.edges())


def _cograph_recipe(steps) -> families.CographRecipe:
    try:
        return families.CographRecipe(
            tuple((str(op), int(target)) for op, target in steps)
        )
    except (TypeError, ValueError, MuvisError) as exc:
        raise HTTPException(status_code=422, detail=f"bad recipe: {exc}")


def _cactus_recipe(steps) -> families.CactusRecipe:
    try:
        return families.CactusRecipe(
            tuple((str(op), int(at), int(length)) for op, at, length in steps)
        )
    except (TypeError, ValueError, MuvisError) as exc:
        raise HTTPException(status_code=422, detail=f"bad recipe: {exc}")


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/graphs/generate", response_model=GraphModel)
def generate(req: GenerateRequest) -> GraphModel:
    params = dict(req.params)
    if req.recipe is not None:
        if req.family == "cograph":
            params["recipe"] = _cograph_recipe(req.recipe)
        elif req.family == "cactus":
            params["recipe"] = _cactus_recipe(req.recipe)
    try:
        graph = families.generate(families.FamilySpec(req.family, params, req.seed))
    except (KeyError, MuvisError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return _to_model(graph)


@app.post("/products/strong", response_model=ProductResponse)
def product(req: ProductRequest) -> ProductResponse:
    graphs = [_to_graph(m) for m in req.factors]
    try:
        prod, index = strong_product_multi(graphs)
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ProductResponse(graph=_to_model(prod), factor_orders=list(index.factor_orders))


@app.post("/solve", response_model=SolveResponse)
def solve(req: SolveRequest) -> SolveResponse:
    graph = _to_graph(req.graph)
    try:
        if req.solver == "brute":
            result = visibility.brute_force_mu(graph, req.kind, req.oracle_limit)
        elif req.solver == "heuristic":
            cert = visibility.mu_heuristic(
                graph, req.time_budget if req.time_budget else 10.0, req.seed
            )
            result = visibility.SolveResult(cert.size, cert, 0, 0.0, exact=False)
        else:
            options = visibility.SolveOptions(
                node_budget=req.node_budget,
                time_budget=req.time_budget,
                oracle_limit=req.oracle_limit,
            )
            result = visibility.solve_exact(graph, req.kind, options)
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return SolveResponse(
        value=result.value,
        vertices=result.certificate.vertices.members(),
        kind=req.kind,
        exact=result.exact,
        nodes_explored=result.nodes_explored,
        elapsed=result.elapsed,
    )


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    graph = _to_graph(req.graph)
    try:
        vertices = VertexSet.from_iterable(graph.n, req.vertices)
        verified = visibility.check_set(
            graph, all_pairs_distances(graph), vertices, req.kind
        )
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return CheckResponse(verified=verified, kind=req.kind, size=len(vertices))


@app.post("/construct", response_model=CertificateModel)
def construct(req: ConstructRequest) -> CertificateModel:
    try:
        if req.theorem == "thm4.4":
            if not req.dims:
                raise HTTPException(status_code=422, detail="thm4.4 needs dims")
            result, _ = constructions.grid_extremal_set(req.dims)
        elif req.theorem in ("thm5.1", "thm5.4", "blockmu"):
            if req.graph is None:
                raise HTTPException(status_code=422, detail=f"{req.theorem} needs graph")
            graph = _to_graph(req.graph)
            if req.theorem == "thm5.1":
                result = constructions.prism_layer_set(graph)
            elif req.theorem == "thm5.4":
                result = constructions.block_prism_set(graph)
            else:
                cert = constructions.block_graph_mu_set(graph)
                result = constructions.ConstructionResult(graph, None, cert, cert.size)
        elif req.theorem in ("thm4.1", "cor4.2", "thm4.6", "cor4.5"):
            if not req.factors:
                raise HTTPException(status_code=422, detail=f"{req.theorem} needs factors")
            graphs = [_to_graph(m) for m in req.factors]
            if req.theorem == "cor4.5":
                result = constructions.universal_product_tmv(graphs)
            else:
                if req.sets is not None:
                    sets = [
                        VertexSet.from_iterable(g.n, s)
                        for g, s in zip(graphs, req.sets)
                    ]
                elif req.theorem == "thm4.6":
                    sets = [visibility.mu_exact(g).certificate.vertices for g in graphs]
                else:
                    sets = [
                        visibility.max_feasible_tmv(g).certificate.vertices
                        for g in graphs
                    ]
                if req.theorem == "thm4.1":
                    result = constructions.product_tmv_set(
                        graphs[0], sets[0], graphs[1], sets[1]
                    )
                elif req.theorem == "thm4.6":
                    result = constructions.product_mv_set(
                        graphs[0], sets[0], graphs[1], sets[1]
                    )
                else:
                    result = constructions.multiway_tmv_set(graphs, sets)
        else:
            raise HTTPException(status_code=422, detail=f"unknown theorem {req.theorem}")
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    cert = result.certificate
    tuples = None
    if result.index is not None:
        tuples = [list(result.index.decode(v)) for v in cert.vertices]
    return CertificateModel(
        graph=_to_model(result.graph),
        kind=cert.kind,
        vertices=cert.vertices.members(),
        size=cert.size,
        verified=cert.verified,
        formula_value=result.formula_value,
        product_tuples=tuples,
    )


@app.post("/classify/cograph", response_model=ClassifyResponse)
def classify_cograph(req: ClassifyCographRequest) -> ClassifyResponse:
    recipe = _cograph_recipe(req.recipe)
    try:
        cls = constructions.classify_cograph(recipe)
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ClassifyResponse(family=cls.family, verdicts=cls.verdicts)


@app.post("/classify/cactus", response_model=ClassifyResponse)
def classify_cactus(req: ClassifyCactusRequest) -> ClassifyResponse:
    graph = _to_graph(req.graph)
    try:
        cls = constructions.classify_cactus(graph)
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ClassifyResponse(family=cls.family, verdicts=cls.verdicts)


@app.post("/tables/run", response_model=TableResponse)
def run_table(req: TableRequest) -> TableResponse:
    try:
        headers, rows = tables.run_experiment(
            req.experiment, req.n_min, req.n_max, req.count, req.seed
        )
    except MuvisError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return TableResponse(headers=headers, rows=rows)
