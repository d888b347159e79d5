"""File formats: text edge lists, JSON certificate documents, DOT export."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import Graph, InvalidGraphError, VertexSet, build_graph
from .products import ProductIndex


class FormatError(InvalidGraphError):
    """Malformed edge-list or certificate file."""


def graph_to_edge_list_text(graph: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    """Parse '# comment' lines, an 'n m' header, then m 'u v' lines."""

    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise FormatError("empty edge-list file")
    header = rows[0].split()
    if len(header) != 2:
        raise FormatError(f"bad header line {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad header line {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} edges, file has {len(rows) - 1}")
    edges: List[Tuple[int, int]] = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line {row!r}") from exc
    try:
        return build_graph(n, edges)
    except InvalidGraphError as exc:
        raise FormatError(str(exc)) from exc


def save_graph(graph: Graph, path: str, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_edge_list_text(graph, comments))


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list_text(fh.read())


@dataclass
class CertificateDocument:
    """Round-trippable certificate: graph, kind, set, and solver metadata.

    `graph` is either an inline {"n":..., "edges": [[u, v], ...]} object or a
    {"file": path} reference resolved relative to the document's location.
    """

    graph: Dict[str, object]
    kind: str
    vertices: List[int]
    size: int
    verified: bool
    product_tuples: Optional[List[List[int]]] = None
    metadata: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "graph": self.graph,
            "kind": self.kind,
            "set": self.vertices,
            "size": self.size,
            "verified": self.verified,
            "metadata": self.metadata,
        }
        if self.product_tuples is not None:
            payload["product_tuples"] = self.product_tuples
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CertificateDocument":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"certificate is not valid JSON: {exc}") from exc
        for key in ("graph", "kind", "set", "size", "verified"):
            if key not in payload:
                raise FormatError(f"certificate missing field {key!r}")
        return cls(
            graph=payload["graph"],
            kind=payload["kind"],
            vertices=[int(v) for v in payload["set"]],
            size=int(payload["size"]),
            verified=bool(payload["verified"]),
            product_tuples=payload.get("product_tuples"),
            metadata=payload.get("metadata", {}),
        )

    def resolve_graph(self, base_dir: str = ".") -> Graph:
        if "file" in self.graph:
            return load_graph(os.path.join(base_dir, str(self.graph["file"])))
        if "n" in self.graph and "edges" in self.graph:
            return build_graph(
                int(self.graph["n"]),
                [(int(u), int(v)) for u, v in self.graph["edges"]],  # type: ignore[union-attr]
            )
        raise FormatError("certificate graph must be inline or a file reference")


def make_certificate_document(
    graph: Graph,
    kind: str,
    vertices: VertexSet,
    verified: bool,
    index: Optional[ProductIndex] = None,
    metadata: Optional[Dict[str, object]] = None,
    graph_file: Optional[str] = None,
) -> CertificateDocument:
    members = vertices.members()
    graph_ref: Dict[str, object]
    if graph_file is not None:
        graph_ref = {"file": graph_file}
    else:
        graph_ref = {"n": graph.n, "edges": [list(e) for e in graph.edges()]}
    tuples = None
    if index is not None:
        tuples = [list(index.decode(v)) for v in members]
    return CertificateDocument(
        graph=graph_ref,
        kind=kind,
        vertices=members,
        size=len(members),
        verified=verified,
        product_tuples=tuples,
        metadata=metadata or {},
    )


def save_certificate(doc: CertificateDocument, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(doc.to_json())


def load_certificate(path: str) -> CertificateDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return CertificateDocument.from_json(fh.read())


def to_dot(
    graph: Graph,
    highlight: Optional[VertexSet] = None,
    index: Optional[ProductIndex] = None,
    name: str = "G",
) -> str:
    """DOT text with highlighted certificate vertices and tuple labels."""

    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        attrs = []
        if index is not None:
            label = ",".join(str(c) for c in index.decode(v))
            attrs.append(f'label="{v}:({label})"')
        if highlight is not None and v in highlight:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightblue")
        attr_text = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{attr_text};")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
