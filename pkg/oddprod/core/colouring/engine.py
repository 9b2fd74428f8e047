"""
Forward greedy odd-colouring engine
Vertices are coloured in lex order; each receives the smallest colour outside
X (colours on its risk set) and Y (the unique odd colour of each coloured
neighbour, when there is exactly one)
"""

import logging
import time
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from oddprod.config.variants import (
    Bounds,
    FactorKind,
    general_bounds,
    path_bounds,
    path_clique_bounds,
)
from oddprod.core.colouring.base import Colouring, RunStats
from oddprod.core.product.factors import ProductVertex
from oddprod.core.product.sets import risk_set, risk_shape
from oddprod.core.product.subgraph import ProductSubgraph, check_vertex
from oddprod.utils.errors import ContractError, PaletteExhaustedError

logger = logging.getLogger(__name__)


def forbidden_sets(
    graph: ProductSubgraph, v: ProductVertex, partial: Colouring
) -> Tuple[Set[int], Set[int]]:
    """
    Compute X and Y for ``v`` from scratch.

    Args:
        graph: The input graph G
        v: Vertex about to be coloured
        partial: Colouring of exactly the vertices lex-smaller than v

    Returns:
        (X, Y): colours on the risk set of v, and the union of Y_w over the
        coloured neighbours w of v

    Raises:
        ContractError: if v is not in G or ``partial`` covers a different prefix
    """
    v = check_vertex(graph.host, graph.secondary, v)
    p = graph.position.get(v)
    if p is None:
        raise ContractError(f"{v} is not a vertex of G", rule_id="contract.vertex")
    if set(partial) != set(graph.vertices[:p]):
        raise ContractError(
            f"partial colouring must cover exactly the {p} vertices before {v}",
            rule_id="contract.prefix",
        )

    x = {partial[w] for w in risk_set(graph, v) if w in partial}
    y: Set[int] = set()
    for w in graph.neighbours(v):
        if w not in partial:
            continue
        odd: Set[int] = set()
        for u in graph.neighbours(w):
            if u in partial:
                odd ^= {partial[u]}
        if len(odd) == 1:
            y |= odd
    return x, y


def _greedy(
    graph: ProductSubgraph,
    palette: int,
    risk: Callable[[ProductVertex], Iterator[Tuple]],
) -> Tuple[Colouring, RunStats]:
    """
    One forward pass with incremental parity bookkeeping.

    ``odd[q]`` is the set of colours with odd multiplicity among the coloured
    neighbours of q; it is updated once per edge endpoint.
    """
    started = time.perf_counter()
    vertices = graph.vertices
    position = graph.position
    back = graph.back_adjacency
    colour: List[int] = [0] * len(vertices)
    odd: List[Set[int]] = [set() for _ in vertices]
    stats = RunStats()

    for p, v in enumerate(vertices):
        x = set()
        for coords in risk(v):
            q = position.get(coords)
            if q is not None and q < p:
                x.add(colour[q])

        y = set()
        for q in back[p]:
            odd_q = odd[q]
            if len(odd_q) == 1:
                y.update(odd_q)

        forbidden = x | y
        stats.observe(len(x), len(y), len(forbidden))

        c = 1
        while c in forbidden:
            c += 1
        if c > palette:
            raise PaletteExhaustedError(
                f"no free colour for {v}: |X|={len(x)}, |Y|={len(y)}, palette={palette}",
                vertex=v,
                palette=palette,
            )
        colour[p] = c

        odd_p = odd[p]
        for q in back[p]:
            cq = colour[q]
            if cq in odd_p:
                odd_p.remove(cq)
            else:
                odd_p.add(cq)
            odd_q = odd[q]
            if c in odd_q:
                odd_q.remove(c)
            else:
                odd_q.add(c)

    assignment: Dict[ProductVertex, int] = dict(zip(vertices, colour))
    stats.colours_used = len(set(colour))
    elapsed = time.perf_counter() - started
    logger.info(
        f"Coloured {len(vertices)} vertices with {stats.colours_used}/{palette} colours "
        f"(max |X|={stats.max_x}, max |Y|={stats.max_y}) in {elapsed:.3f}s"
    )
    return Colouring(palette=palette, assignment=assignment), stats


def _require_kind(graph: ProductSubgraph, kind: FactorKind, engine: str) -> None:
    if graph.kind is not kind:
        raise ContractError(
            f"{engine} needs a {kind.value} factor, got {graph.kind.value}",
            rule_id="variant.mismatch",
        )


def _palette(bounds: Bounds, palette: Optional[int]) -> int:
    if palette is None:
        return bounds.palette
    if palette < bounds.palette:
        logger.warning(
            f"Palette {palette} is below the certified bound {bounds.palette}; "
            f"exhaustion is possible"
        )
    return palette


def _risk_of(graph: ProductSubgraph) -> Callable[[ProductVertex], Iterator[Tuple]]:
    host, secondary = graph.host, graph.secondary
    return lambda v: risk_shape(host, secondary, v)


def colour_ttree_path(
    graph: ProductSubgraph, palette: Optional[int] = None
) -> Tuple[Colouring, RunStats]:
    """
    Proper odd colouring of a subgraph of H x P with at most 8t+4 colours.

    The output also keeps every support set rainbow. ``palette`` overrides
    the certified size for experiments.

    Raises:
        ContractError: if the factor is not a path
        PaletteExhaustedError: if no colour is free (only possible on invalid
            input or with a palette override)
    """
    _require_kind(graph, FactorKind.PATH, "colour_ttree_path")
    bounds = path_bounds(graph.host.t)
    return _greedy(graph, _palette(bounds, palette), _risk_of(graph))


def colour_ttree_path_clique(
    graph: ProductSubgraph, palette: Optional[int] = None
) -> Tuple[Colouring, RunStats]:
    """Proper odd colouring of a subgraph of H x P x K_l with at most 8lt+5l-1 colours"""
    _require_kind(graph, FactorKind.PATH_CLIQUE, "colour_ttree_path_clique")
    bounds = path_clique_bounds(graph.host.t, graph.secondary.ell)
    return _greedy(graph, _palette(bounds, palette), _risk_of(graph))


def colour_ttree_maxdeg(
    graph: ProductSubgraph, palette: Optional[int] = None
) -> Tuple[Colouring, RunStats]:
    """Proper odd colouring of a subgraph of H x I with at most (D^2+D)(t+1)+2t+1 colours"""
    _require_kind(graph, FactorKind.GENERAL, "colour_ttree_maxdeg")
    bounds = general_bounds(graph.host.t, graph.secondary.delta)
    return _greedy(graph, _palette(bounds, palette), _risk_of(graph))
