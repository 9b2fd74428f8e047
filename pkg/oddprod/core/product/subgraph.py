"""
Subgraphs of strong products
The product H x F is never materialized; adjacency is decided coordinate-wise and
the input graph G carries explicit vertex and edge sets
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from oddprod.config.variants import FactorKind
from oddprod.core.host import ElimOrderedHost
from oddprod.core.product.factors import ProductVertex, SecondaryFactor
from oddprod.core.report import ValidationReport
from oddprod.utils.errors import InvalidParameterError, InvalidVertexError

logger = logging.getLogger(__name__)

Edge = Tuple[ProductVertex, ProductVertex]


def edge_key(edge: Edge) -> Tuple[ProductVertex, ProductVertex]:
    """Canonical edge order: by the lex-larger endpoint, then the smaller one"""
    return edge[1], edge[0]


def check_vertex(host: ElimOrderedHost, secondary: SecondaryFactor, v: Sequence) -> ProductVertex:
    """
    Coerce ``v`` to a ProductVertex and check it against the factor ranges.

    Raises:
        InvalidVertexError: on out-of-range coordinates or a missing/extra k
    """
    coords = tuple(v)
    if secondary.has_clique:
        if len(coords) != 3 or coords[2] is None:
            raise InvalidVertexError(f"vertex {coords} needs three coordinates (i, j, k)")
    elif len(coords) == 3 and coords[2] is not None:
        raise InvalidVertexError(f"vertex {coords} has a clique index but the factor has none")
    elif len(coords) not in (2, 3):
        raise InvalidVertexError(f"vertex {coords} needs two coordinates (i, j)")

    vertex = ProductVertex(*coords)
    if not 1 <= vertex.i <= host.r:
        raise InvalidVertexError(f"vertex {vertex}: i outside 1..{host.r}")
    if not 1 <= vertex.j <= secondary.h:
        raise InvalidVertexError(f"vertex {vertex}: j outside 1..{secondary.h}")
    if vertex.k is not None and not 1 <= vertex.k <= secondary.ell:
        raise InvalidVertexError(f"vertex {vertex}: k outside 1..{secondary.ell}")
    return vertex


def product_adjacent(
    host: ElimOrderedHost, secondary: SecondaryFactor, u: Sequence, v: Sequence
) -> bool:
    """
    Strong-product adjacency.

    True iff u != v and every coordinate pair is equal or adjacent in its
    factor (any two clique indices are), with at least one coordinate differing.
    """
    u = check_vertex(host, secondary, u)
    v = check_vertex(host, secondary, v)
    if u == v:
        return False
    if u.i != v.i and not host.adjacent(u.i, v.i):
        return False
    if u.j != v.j and not secondary.adjacent(u.j, v.j):
        return False
    return True


def back_product_neighbours(
    host: ElimOrderedHost, secondary: SecondaryFactor, v: ProductVertex
) -> Iterator[Tuple]:
    """
    Every product vertex lex-smaller than ``v`` and adjacent to it, as plain tuples.

    Lex-smaller neighbours share i (with a smaller j, or equal j and smaller k)
    or sit in a back-clique row m in C_i.
    """
    i, j, k = v
    if secondary.kind is FactorKind.GENERAL:
        closed = secondary.closed_neighbourhoods[j - 1]
        for m in sorted(host.back(i)):
            for jj in closed:
                yield (m, jj, None)
        for jj in closed:
            if jj < j:
                yield (i, jj, None)
        return

    rows = range(max(j - 1, 1), min(j + 1, secondary.h) + 1)
    ks: Sequence[Optional[int]] = range(1, secondary.ell + 1) if k is not None else (None,)
    for m in sorted(host.back(i)):
        for jj in rows:
            for kk in ks:
                yield (m, jj, kk)
    if j > 1:
        for kk in ks:
            yield (i, j - 1, kk)
    if k is not None:
        for kk in range(1, k):
            yield (i, j, kk)


def vertex_space(host: ElimOrderedHost, secondary: SecondaryFactor) -> Iterator[ProductVertex]:
    """All product vertices in lex order"""
    ks: Sequence[Optional[int]] = range(1, secondary.ell + 1) if secondary.has_clique else (None,)
    for i in range(1, host.r + 1):
        for j in range(1, secondary.h + 1):
            for k in ks:
                yield ProductVertex(i, j, k)


@dataclass(frozen=True)
class ProductSubgraph:
    """
    The input graph G, a subgraph (not necessarily induced) of H x F.

    ``vertices`` are lex-sorted and unique. ``edges`` hold (a, b) pairs with
    a lex-smaller than b, in canonical order; loops, dangling endpoints and
    duplicates survive construction so that ``validate_subgraph`` can report them.
    ``listed_order`` keeps the vertex order of the document G was loaded from,
    when it differs from lex order.
    """

    host: ElimOrderedHost
    secondary: SecondaryFactor
    vertices: Tuple[ProductVertex, ...]
    edges: Tuple[Edge, ...]
    listed_order: Tuple[ProductVertex, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def build(
        cls,
        host: ElimOrderedHost,
        secondary: SecondaryFactor,
        vertices: Iterable[Sequence],
        edges: Iterable[Tuple[Sequence, Sequence]] = (),
    ) -> "ProductSubgraph":
        """Canonicalize vertex and edge collections into a ProductSubgraph"""
        vertex_set = sorted({ProductVertex(*v) for v in vertices})
        oriented: List[Edge] = []
        for a, b in edges:
            a, b = ProductVertex(*a), ProductVertex(*b)
            oriented.append((a, b) if a <= b else (b, a))
        oriented.sort(key=edge_key)
        return cls(
            host=host, secondary=secondary, vertices=tuple(vertex_set), edges=tuple(oriented)
        )

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def kind(self) -> FactorKind:
        return self.secondary.kind

    @property
    def document_order(self) -> Tuple[ProductVertex, ...]:
        """Vertices in the order colouring documents list their colours"""
        return self.listed_order or self.vertices

    @cached_property
    def position(self) -> Dict[ProductVertex, int]:
        """Vertex -> index into ``vertices`` (its rank in lex order)"""
        return {v: p for p, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Neighbour positions of every vertex, ascending; ignores malformed edges"""
        position = self.position
        neighbours: List[Set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            pa, pb = position.get(a), position.get(b)
            if pa is None or pb is None or pa == pb:
                continue
            neighbours[pa].add(pb)
            neighbours[pb].add(pa)
        return tuple(tuple(sorted(nb)) for nb in neighbours)

    @cached_property
    def back_adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Positions of the lex-smaller neighbours of every vertex"""
        return tuple(
            tuple(q for q in nb if q < p) for p, nb in enumerate(self.adjacency)
        )

    def __contains__(self, v) -> bool:
        return v in self.position

    def neighbours(self, v: ProductVertex) -> Set[ProductVertex]:
        """N_G(v)"""
        return {self.vertices[q] for q in self.adjacency[self.position[v]]}

    def degree(self, v: ProductVertex) -> int:
        return len(self.adjacency[self.position[v]])


def validate_subgraph(graph: ProductSubgraph) -> ValidationReport:
    """
    Check the ProductSubgraph invariants.

    Rule ids: subgraph.vertex (coordinates out of range), subgraph.loop,
    subgraph.endpoint (edge endpoint not a vertex), subgraph.adjacency (not a
    strong-product edge) and subgraph.duplicate.
    """
    report = ValidationReport()
    valid: Set[ProductVertex] = set()
    for v in graph.vertices:
        try:
            check_vertex(graph.host, graph.secondary, v)
            valid.add(v)
        except InvalidVertexError as e:
            report.add("subgraph.vertex", (v,), str(e))

    seen: Set[Edge] = set()
    for a, b in graph.edges:
        if a == b:
            report.add("subgraph.loop", (a,), f"loop at {a}")
            continue
        missing = [x for x in (a, b) if x not in graph.position]
        if missing:
            report.add(
                "subgraph.endpoint",
                (a, b),
                f"edge {a}-{b}: endpoint {missing[0]} is not a vertex of G",
            )
            continue
        if a not in valid or b not in valid:
            continue
        if not product_adjacent(graph.host, graph.secondary, a, b):
            report.add("subgraph.adjacency", (a, b), f"edge {a}-{b} is not product-adjacent")
        if (a, b) in seen:
            report.add("subgraph.duplicate", (a, b), f"edge {a}-{b} appears more than once")
        seen.add((a, b))
    return report


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise InvalidParameterError(f"{name}={value} must lie in [0, 1]", rule_id=f"param.{name}")


def sample_subgraph(
    host: ElimOrderedHost,
    secondary: SecondaryFactor,
    q_vertex: float,
    p_edge: float,
    seed: int,
) -> ProductSubgraph:
    """
    Random subgraph of H x F.

    Each product vertex survives with probability ``q_vertex``; each product
    edge between survivors is kept with probability ``p_edge``. Deterministic
    for a given seed.
    """
    _check_probability("q_vertex", q_vertex)
    _check_probability("p_edge", p_edge)

    rng = np.random.default_rng(seed)
    space = list(vertex_space(host, secondary))
    keep = rng.random(len(space)) < q_vertex if space else np.zeros(0, dtype=bool)
    kept: Dict[ProductVertex, ProductVertex] = {v: v for v, k in zip(space, keep) if k}

    candidates: List[Edge] = []
    for v in kept:
        for w in sorted(set(back_product_neighbours(host, secondary, v))):
            a = kept.get(w)
            if a is not None:
                candidates.append((a, v))

    chosen = rng.random(len(candidates)) < p_edge if candidates else np.zeros(0, dtype=bool)
    edges = tuple(e for e, c in zip(candidates, chosen) if c)

    logger.debug(
        f"Sampled subgraph: {len(kept)}/{len(space)} vertices, {len(edges)}/{len(candidates)} "
        f"edges (q={q_vertex}, p={p_edge}, seed={seed})"
    )
    return ProductSubgraph(host=host, secondary=secondary, vertices=tuple(kept), edges=edges)


def full_product(host: ElimOrderedHost, secondary: SecondaryFactor) -> ProductSubgraph:
    """The whole strong product as a ProductSubgraph"""
    return sample_subgraph(host, secondary, 1.0, 1.0, seed=0)


def induced_subgraph(graph: ProductSubgraph, vertices: Iterable[ProductVertex]) -> ProductSubgraph:
    """G[S]: keep the given vertices and every edge of G between them"""
    keep = set(vertices) & set(graph.position)
    return ProductSubgraph(
        host=graph.host,
        secondary=graph.secondary,
        vertices=tuple(v for v in graph.vertices if v in keep),
        edges=tuple((a, b) for a, b in graph.edges if a in keep and b in keep),
    )
