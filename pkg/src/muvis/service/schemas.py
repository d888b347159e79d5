"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field


class GraphModel(BaseModel):
    n: int
    edges: List[Tuple[int, int]] = Field(default_factory=list)


class GenerateRequest(BaseModel):
    family: str
    params: Dict[str, object] = Field(default_factory=dict)
    # Recipe steps for cograph ([op, target]) or cactus ([op, at, length]).
    recipe: Optional[List[List[object]]] = None
    seed: int = 0


class ProductRequest(BaseModel):
    factors: List[GraphModel]


class ProductResponse(BaseModel):
    graph: GraphModel
    factor_orders: List[int]


class SolveRequest(BaseModel):
    graph: GraphModel
    kind: str = "mv"
    solver: str = "bnb"
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    oracle_limit: int = 18
    seed: int = 0


class SolveResponse(BaseModel):
    value: int
    vertices: List[int]
    kind: str
    exact: bool
    nodes_explored: int
    elapsed: float


class CheckRequest(BaseModel):
    graph: GraphModel
    kind: str
    vertices: List[int]


class CheckResponse(BaseModel):
    verified: bool
    kind: str
    size: int


class ConstructRequest(BaseModel):
    theorem: str
    factors: Optional[List[GraphModel]] = None
    sets: Optional[List[List[int]]] = None
    dims: Optional[List[int]] = None
    graph: Optional[GraphModel] = None
    oracle_limit: int = 18


class CertificateModel(BaseModel):
    graph: GraphModel
    kind: str
    vertices: List[int]
    size: int
    verified: bool
    formula_value: int
    product_tuples: Optional[List[List[int]]] = None


class ClassifyCographRequest(BaseModel):
    recipe: List[List[object]]


class ClassifyCactusRequest(BaseModel):
    graph: GraphModel


class ClassifyResponse(BaseModel):
    family: str
    verdicts: Dict[str, Union[bool, int]]


class TableRequest(BaseModel):
    experiment: str
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    count: Optional[int] = None
    seed: int = 0


class TableResponse(BaseModel):
    headers: List[str]
    rows: List[Dict[str, object]]
