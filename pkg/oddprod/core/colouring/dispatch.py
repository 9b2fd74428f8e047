"""
Variant dispatch for the colouring engines
"""

from typing import Callable, Dict, Optional, Tuple

from oddprod.config.variants import (
    DEFAULT_VARIANT,
    VARIANT_FACTOR,
    Bounds,
    FactorKind,
    Variant,
    bounds_for,
)
from oddprod.core.colouring.base import Colouring, RunStats
from oddprod.core.colouring.engine import (
    colour_ttree_maxdeg,
    colour_ttree_path,
    colour_ttree_path_clique,
)
from oddprod.core.colouring.reduction import colour_path_clique_via_blowup
from oddprod.core.product.subgraph import ProductSubgraph
from oddprod.utils.errors import ContractError

Engine = Callable[..., Tuple[Colouring, RunStats]]

ENGINES: Dict[Variant, Engine] = {
    Variant.THM1: colour_ttree_path,
    Variant.THM3: colour_ttree_path_clique,
    Variant.THM4: colour_ttree_maxdeg,
    Variant.THM3_BLOWUP: colour_path_clique_via_blowup,
}


def resolve_variant(graph: ProductSubgraph, variant: Optional[Variant] = None) -> Variant:
    """The requested variant, or the default for the factor kind; raises on a mismatch"""
    if variant is None:
        return DEFAULT_VARIANT[graph.kind]
    if VARIANT_FACTOR[variant] is not graph.kind:
        raise ContractError(
            f"variant {variant.value} expects a {VARIANT_FACTOR[variant].value} factor, "
            f"instance has {graph.kind.value}",
            rule_id="variant.mismatch",
        )
    return variant


def certified_bounds(graph: ProductSubgraph, variant: Optional[Variant] = None) -> Bounds:
    """Palette and |X|, |Y| ceilings that ``variant`` guarantees on G"""
    variant = resolve_variant(graph, variant)
    delta = graph.secondary.delta if graph.kind is FactorKind.GENERAL else 0
    return bounds_for(variant, graph.host.t, graph.secondary.ell, delta)


def colour(
    graph: ProductSubgraph,
    variant: Optional[Variant] = None,
    palette: Optional[int] = None,
) -> Tuple[Colouring, RunStats]:
    """
    Colour G with the engine for ``variant``.

    Without a variant the engine matching the factor kind is used.

    Raises:
        ContractError: if the variant does not accept the instance's factor kind
    """
    variant = resolve_variant(graph, variant)
    return ENGINES[variant](graph, palette=palette)
