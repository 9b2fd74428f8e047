"""
Independent verifiers for colourings of product subgraphs
None of these share code with the greedy engine's bookkeeping: they recount
neighbourhoods from the edge list
"""

import logging
from collections import Counter, defaultdict
from typing import Dict, List, Set, Tuple

from oddprod.core.colouring.base import Colouring
from oddprod.core.product.factors import ProductVertex
from oddprod.core.product.sets import owner_shape, support_set
from oddprod.core.product.subgraph import ProductSubgraph
from oddprod.core.report import ValidationReport
from oddprod.utils.errors import ContractError

logger = logging.getLogger(__name__)

OddWitness = Dict[ProductVertex, int]


def _require_total(graph: ProductSubgraph, colouring: Colouring) -> None:
    missing = [v for v in graph.vertices if v not in colouring]
    if missing:
        raise ContractError(
            f"colouring is partial: {len(missing)} vertices uncoloured, first {missing[0]}",
            rule_id="contract.total",
        )


def verify_proper(graph: ProductSubgraph, colouring: Colouring) -> ValidationReport:
    """
    Every edge of G must be bichromatic.

    Raises:
        ContractError: if the colouring misses a vertex of G
    """
    _require_total(graph, colouring)
    report = ValidationReport()
    for a, b in graph.edges:
        if a == b or a not in colouring or b not in colouring:
            continue
        if colouring[a] == colouring[b]:
            report.add(
                "proper.monochromatic",
                (a, b),
                f"edge {a}-{b} has both ends coloured {colouring[a]}",
            )
    return report


def _neighbour_lists(graph: ProductSubgraph) -> Dict[ProductVertex, List[ProductVertex]]:
    neighbours: Dict[ProductVertex, List[ProductVertex]] = defaultdict(list)
    for a, b in graph.edges:
        if a != b:
            neighbours[a].append(b)
            neighbours[b].append(a)
    return neighbours


def verify_odd(graph: ProductSubgraph, colouring: Colouring) -> Tuple[ValidationReport, OddWitness]:
    """
    Every non-isolated vertex must see some colour an odd number of times.

    Returns:
        The report and, for each non-isolated vertex that passes, the smallest
        colour with odd multiplicity in its neighbourhood
    """
    _require_total(graph, colouring)
    report = ValidationReport()
    witness: OddWitness = {}
    neighbours = _neighbour_lists(graph)
    for v in graph.vertices:
        nbs = neighbours.get(v)
        if not nbs:
            continue
        histogram = Counter(colouring[w] for w in nbs)
        odd = [c for c, count in histogram.items() if count % 2 == 1]
        if odd:
            witness[v] = min(odd)
        else:
            report.add(
                "odd.parity",
                (v,),
                f"{v} sees every colour an even number of times: {dict(sorted(histogram.items()))}",
            )
    return report, witness


def verify_support_distinct(graph: ProductSubgraph, colouring: Colouring) -> ValidationReport:
    """
    Every support set must be rainbow.

    Only product vertices u whose support set can meet V(G) are visited; they
    are found by inverting the support-set shape around each vertex of G.
    """
    _require_total(graph, colouring)
    owners: Set[Tuple] = set()
    for v in graph.vertices:
        owners.update(owner_shape(graph.host, graph.secondary, v))

    report = ValidationReport()
    for u in sorted(ProductVertex(*o) for o in owners):
        members = support_set(graph, u)
        if len(members) < 2:
            continue
        by_colour: Dict[int, List[ProductVertex]] = defaultdict(list)
        for w in members:
            by_colour[colouring[w]].append(w)
        for c, clash in sorted(by_colour.items()):
            if len(clash) > 1:
                report.add(
                    "support.distinct",
                    (u, *sorted(clash)),
                    f"support set of {u} repeats colour {c} on "
                    f"{', '.join(map(str, sorted(clash)))}",
                )
    return report
