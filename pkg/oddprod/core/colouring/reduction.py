"""
Colouring H x P x K_l through the blown-up host H x K_l
H x P x K_l is isomorphic to (H x K_l) x P, and H x K_l is a host of width
l(t+1)-1, so the path engine applies directly with 8lt+8l-4 colours
"""

import logging
from typing import Dict, Optional, Tuple

from oddprod.config.variants import FactorKind, blowup_bounds
from oddprod.core.colouring.base import Colouring, RunStats
from oddprod.core.colouring.engine import colour_ttree_path
from oddprod.core.host import blowup_index, clique_blowup
from oddprod.core.product.factors import ProductVertex, SecondaryFactor
from oddprod.core.product.subgraph import ProductSubgraph
from oddprod.utils.errors import ContractError

logger = logging.getLogger(__name__)


def blowup_subgraph(
    graph: ProductSubgraph,
) -> Tuple[ProductSubgraph, Dict[ProductVertex, ProductVertex]]:
    """
    Re-express G inside (H x K_l) x P.

    Returns the mapped graph and the map from each original vertex (i, j, k)
    to its image ((i - 1) * l + k, j).
    """
    if graph.kind is not FactorKind.PATH_CLIQUE:
        raise ContractError(
            f"the clique blow-up needs a {FactorKind.PATH_CLIQUE.value} factor, "
            f"got {graph.kind.value}",
            rule_id="variant.mismatch",
        )
    ell = graph.secondary.ell
    image = {v: ProductVertex(blowup_index(v.i, v.k, ell), v.j) for v in graph.vertices}
    mapped = ProductSubgraph.build(
        host=clique_blowup(graph.host, ell),
        secondary=SecondaryFactor.path(graph.secondary.h),
        vertices=image.values(),
        edges=((image[a], image[b]) for a, b in graph.edges),
    )
    return mapped, image


def colour_path_clique_via_blowup(
    graph: ProductSubgraph, palette: Optional[int] = None
) -> Tuple[Colouring, RunStats]:
    """Proper odd colouring of a subgraph of H x P x K_l with at most 8lt+8l-4 colours"""
    mapped, image = blowup_subgraph(graph)
    if palette is None:
        palette = blowup_bounds(graph.host.t, graph.secondary.ell).palette
    mapped_colouring, stats = colour_ttree_path(mapped, palette=palette)
    assignment = {v: mapped_colouring[image[v]] for v in graph.vertices}
    logger.info(
        f"Blow-up route used width {mapped.host.t} and {stats.colours_used}/{palette} colours"
    )
    return Colouring(palette=palette, assignment=assignment), stats
