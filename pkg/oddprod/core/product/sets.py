"""
Support sets and risk sets
C_v is the neighbourhood template on which colours must stay distinct; R(v)
over-approximates every earlier vertex that shares some C_u with v
"""

from typing import Iterator, List, Optional, Sequence, Set, Tuple

from oddprod.config.variants import FactorKind
from oddprod.core.host import ElimOrderedHost
from oddprod.core.product.factors import ProductVertex, SecondaryFactor
from oddprod.core.product.subgraph import ProductSubgraph, check_vertex


def lex_key(v: ProductVertex) -> Tuple[int, int, int]:
    """Processing order: (i, j) ascending, then k ascending"""
    return v.i, v.j, v.k or 0


def _rows(secondary: SecondaryFactor, lo: int, hi: int) -> range:
    return range(max(lo, 1), min(hi, secondary.h) + 1)


def _clique_indices(secondary: SecondaryFactor) -> Sequence[Optional[int]]:
    return range(1, secondary.ell + 1) if secondary.has_clique else (None,)


def support_shape(
    host: ElimOrderedHost, secondary: SecondaryFactor, v: ProductVertex
) -> Iterator[Tuple]:
    """
    C_v before intersecting with V(G), as plain coordinate tuples.

    Path rows outside 1..h are the sentinels and contribute nothing.
    """
    i, j, _ = v
    if secondary.kind is FactorKind.GENERAL:
        closed = secondary.closed_neighbourhoods[j - 1]
        for m in (i, *sorted(host.back(i))):
            for jj in closed:
                yield (m, jj, None)
        return

    ks = _clique_indices(secondary)
    for m in sorted(host.back(i)):
        for jj in _rows(secondary, j - 1, j + 1):
            for kk in ks:
                yield (m, jj, kk)
    for jj in _rows(secondary, j - 1, j):
        for kk in ks:
            yield (i, jj, kk)


def risk_shape(
    host: ElimOrderedHost, secondary: SecondaryFactor, v: ProductVertex
) -> Iterator[Tuple]:
    """R(v) before intersecting with V(G); never contains v itself"""
    i, j, k = v
    if secondary.kind is FactorKind.GENERAL:
        ball = secondary.balls2[j - 1]
        for m in (i, *sorted(host.back(i))):
            for jj in ball:
                if m != i or jj != j:
                    yield (m, jj, None)
        return

    ks = _clique_indices(secondary)
    for m in sorted(host.back(i)):
        for jj in _rows(secondary, j - 2, j + 2):
            for kk in ks:
                yield (m, jj, kk)
    for jj in _rows(secondary, j - 2, j):
        for kk in ks:
            if jj != j or kk != k:
                yield (i, jj, kk)


def owner_shape(
    host: ElimOrderedHost, secondary: SecondaryFactor, v: ProductVertex
) -> Iterator[Tuple]:
    """Every in-range product vertex u with v in the shape of C_u"""
    i, j, _ = v
    if secondary.kind is FactorKind.GENERAL:
        closed = secondary.closed_neighbourhoods[j - 1]
        for a in (i, *host.forward[i - 1]):
            for b in closed:
                yield (a, b, None)
        return

    ks = _clique_indices(secondary)
    for b in _rows(secondary, j, j + 1):
        for c in ks:
            yield (i, b, c)
    for a in host.forward[i - 1]:
        for b in _rows(secondary, j - 1, j + 1):
            for c in ks:
                yield (a, b, c)


def _intersect(graph: ProductSubgraph, shape: Iterator[Tuple]) -> Set[ProductVertex]:
    position = graph.position
    vertices = graph.vertices
    found: Set[ProductVertex] = set()
    for coords in shape:
        p = position.get(coords)
        if p is not None:
            found.add(vertices[p])
    return found


def support_set(graph: ProductSubgraph, v: Sequence) -> Set[ProductVertex]:
    """
    C_v intersected with V(G).

    ``v`` may be any product vertex, not only a vertex of G.

    Raises:
        InvalidVertexError: if v is out of range
    """
    v = check_vertex(graph.host, graph.secondary, v)
    return _intersect(graph, support_shape(graph.host, graph.secondary, v))


def risk_set(graph: ProductSubgraph, v: Sequence) -> Set[ProductVertex]:
    """
    R(v) intersected with V(G), excluding v.

    Sizes never exceed 5t+2 (path), 5lt+3l-1 (path times K_l) or
    (t+1)(D^2+1)-1 (general factor of maximum degree D).
    """
    v = check_vertex(graph.host, graph.secondary, v)
    return _intersect(graph, risk_shape(graph.host, graph.secondary, v))


def support_owners(graph: ProductSubgraph, v: Sequence) -> List[ProductVertex]:
    """Product vertices u (in or out of G) whose support set can contain v, lex-sorted"""
    v = check_vertex(graph.host, graph.secondary, v)
    return sorted({ProductVertex(*u) for u in owner_shape(graph.host, graph.secondary, v)})
