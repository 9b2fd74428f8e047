"""
On-disk documents for instances, colourings and oracle graphs
JSON, UTF-8, 1-based indices; edges reference positions in the vertex list
"""

import json
import logging
from dataclasses import replace
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from oddprod.config.variants import FactorKind
from oddprod.core.colouring.base import Colouring
from oddprod.core.host import ElimOrderedHost, validate_host
from oddprod.core.product.factors import ProductVertex, SecondaryFactor, validate_factor
from oddprod.core.product.subgraph import ProductSubgraph, check_vertex, validate_subgraph
from oddprod.core.report import ValidationReport
from oddprod.core.verification.oracle import GenericGraph
from oddprod.utils.errors import (
    DocumentSemanticError,
    DocumentSyntaxError,
    DocumentVersionError,
    InvalidParameterError,
    InvalidVertexError,
)

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class HostModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    t: int = Field(ge=0)
    r: int = Field(ge=0)
    back_cliques: List[List[int]]

    @model_validator(mode="after")
    def _row_count(self) -> "HostModel":
        if len(self.back_cliques) != self.r:
            raise ValueError(f"back_cliques has {len(self.back_cliques)} rows for r={self.r}")
        return self


class SecondaryModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["path", "path_clique", "general"]
    h: int = Field(ge=0)
    ell: Optional[int] = Field(default=None, ge=1)
    adjacency: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def _kind_fields(self) -> "SecondaryModel":
        if self.kind == "path_clique" and self.ell is None:
            raise ValueError("path_clique factors need ell")
        if self.kind != "path_clique" and self.ell is not None:
            raise ValueError(f"ell is not allowed for kind {self.kind}")
        if self.kind == "general" and self.adjacency is None:
            raise ValueError("general factors need adjacency")
        if self.kind != "general" and self.adjacency is not None:
            raise ValueError(f"adjacency is not allowed for kind {self.kind}")
        return self


class InstanceDocument(BaseModel):
    """Serialized ProductSubgraph"""

    model_config = ConfigDict(extra="forbid")

    format_version: int
    host: HostModel
    secondary: SecondaryModel
    vertices: List[List[int]]
    edges: List[Tuple[int, int]]


class ColouringDocument(BaseModel):
    """Colours parallel to the vertex list of the instance document, as written"""

    model_config = ConfigDict(extra="forbid")

    format_version: int
    palette: int = Field(ge=1)
    colours: List[int]


class GenericGraphDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list)


def _parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, line=e.lineno, column=e.colno, original_exception=e)


def _check_version(data: Any) -> None:
    if not isinstance(data, dict):
        raise DocumentSemanticError("document must be a JSON object", rule_id="document.schema")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentVersionError(
            f"unsupported format_version {version!r}; this build reads {FORMAT_VERSION}"
        )


def _validate_model(model: type, data: Any) -> Any:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
            for err in e.errors()
        )
        raise DocumentSemanticError(details, rule_id="document.schema", original_exception=e)


def _raise_on(report: ValidationReport) -> None:
    if not report.ok:
        first = report.violations[0]
        raise DocumentSemanticError(str(report), rule_id=first.rule_id)


def _secondary_from(model: SecondaryModel) -> SecondaryFactor:
    kind = FactorKind(model.kind)
    if kind is FactorKind.PATH:
        return SecondaryFactor.path(model.h)
    if kind is FactorKind.PATH_CLIQUE:
        return SecondaryFactor.path_clique(model.h, model.ell or 1)
    adjacency = model.adjacency or []
    return SecondaryFactor(kind=kind, h=model.h, adjacency=tuple(frozenset(a) for a in adjacency))


def instance_from_document(doc: InstanceDocument) -> ProductSubgraph:
    """Build and fully validate the ProductSubgraph a document describes"""
    host = ElimOrderedHost.from_lists(doc.host.t, doc.host.back_cliques)
    _raise_on(validate_host(host))
    secondary = _secondary_from(doc.secondary)
    _raise_on(validate_factor(secondary))

    vertices: List[ProductVertex] = []
    for coords in doc.vertices:
        try:
            vertices.append(check_vertex(host, secondary, coords))
        except InvalidVertexError as e:
            raise DocumentSemanticError(str(e), rule_id="subgraph.vertex", original_exception=e)
    if len(set(vertices)) != len(vertices):
        raise DocumentSemanticError("vertex list repeats a vertex", rule_id="subgraph.duplicate")

    edges = []
    for a, b in doc.edges:
        for ref in (a, b):
            if not 1 <= ref <= len(vertices):
                raise DocumentSemanticError(
                    f"edge references vertex #{ref}, outside 1..{len(vertices)}",
                    rule_id="document.edge_index",
                )
        edges.append((vertices[a - 1], vertices[b - 1]))

    graph = ProductSubgraph.build(host, secondary, vertices, edges)
    _raise_on(validate_subgraph(graph))
    if tuple(vertices) != graph.vertices:
        graph = replace(graph, listed_order=tuple(vertices))
    return graph


def load_instance(text: str) -> ProductSubgraph:
    """
    Parse and validate an instance document.

    Raises:
        DocumentSyntaxError: malformed JSON (with line and column)
        DocumentVersionError: unknown format_version
        DocumentSemanticError: schema or validation failure (rule id of the first violation)
    """
    data = _parse_json(text)
    _check_version(data)
    doc = _validate_model(InstanceDocument, data)
    graph = instance_from_document(doc)
    logger.info(f"Loaded instance: {graph.n} vertices, {graph.m} edges, kind={graph.kind.value}")
    return graph


def instance_to_document(graph: ProductSubgraph) -> InstanceDocument:
    position = graph.position
    secondary = graph.secondary
    secondary_fields: Dict[str, Any] = {"kind": secondary.kind.value, "h": secondary.h}
    if secondary.kind is FactorKind.PATH_CLIQUE:
        secondary_fields["ell"] = secondary.ell
    if secondary.kind is FactorKind.GENERAL:
        secondary_fields["adjacency"] = [sorted(nb) for nb in secondary.adjacency]
    return InstanceDocument(
        format_version=FORMAT_VERSION,
        host=HostModel(t=graph.host.t, r=graph.host.r, back_cliques=graph.host.to_lists()),
        secondary=SecondaryModel(**secondary_fields),
        vertices=[v.coords() for v in graph.vertices],
        edges=[(position[a] + 1, position[b] + 1) for a, b in graph.edges],
    )


def save_instance(graph: ProductSubgraph) -> str:
    """Canonical, byte-stable serialization (vertices lex-sorted, edges in canonical order)"""
    return instance_to_document(graph).model_dump_json(exclude_none=True) + "\n"


def canonicalize(text: str) -> str:
    return save_instance(load_instance(text))


def load_colouring(text: str, graph: ProductSubgraph) -> Colouring:
    """
    Parse a colouring document against the instance it colours.
    Colours are read in the vertex order of the instance document.

    Raises:
        DocumentSemanticError: length mismatch (colouring.length) or a colour
            outside 1..palette (colouring.range)
    """
    data = _parse_json(text)
    _check_version(data)
    doc = _validate_model(ColouringDocument, data)
    if len(doc.colours) != graph.n:
        raise DocumentSemanticError(
            f"{len(doc.colours)} colours for {graph.n} vertices", rule_id="colouring.length"
        )
    bad = [c for c in doc.colours if not 1 <= c <= doc.palette]
    if bad:
        raise DocumentSemanticError(
            f"colour {bad[0]} outside 1..{doc.palette}", rule_id="colouring.range"
        )
    return Colouring(palette=doc.palette, assignment=dict(zip(graph.document_order, doc.colours)))


def save_colouring(graph: ProductSubgraph, colouring: Colouring) -> str:
    """Colours listed in the vertex order of the document ``graph`` was loaded from"""
    doc = ColouringDocument(
        format_version=FORMAT_VERSION,
        palette=colouring.palette,
        colours=[colouring[v] for v in graph.document_order],
    )
    return doc.model_dump_json() + "\n"


def load_generic_graph(text: str) -> GenericGraph:
    """
    Parse an oracle input: either ``{"n": .., "edges": [[a, b], ..]}`` or a full
    instance document, whose product structure is then forgotten.
    """
    data = _parse_json(text)
    if isinstance(data, dict) and "format_version" in data:
        _check_version(data)
        doc = _validate_model(InstanceDocument, data)
        return GenericGraph.from_product(instance_from_document(doc))
    doc = _validate_model(GenericGraphDocument, data)
    try:
        return GenericGraph(doc.n, tuple(doc.edges))
    except InvalidParameterError as e:
        raise DocumentSemanticError(str(e), rule_id=e.rule_id, original_exception=e)
