"""
Odd-colouring engines
"""

from oddprod.core.colouring.base import Colouring, RunStats
from oddprod.core.colouring.dispatch import (
    ENGINES,
    certified_bounds,
    colour,
    resolve_variant,
)
from oddprod.core.colouring.engine import (
    colour_ttree_maxdeg,
    colour_ttree_path,
    colour_ttree_path_clique,
    forbidden_sets,
)
from oddprod.core.colouring.reduction import blowup_subgraph, colour_path_clique_via_blowup

__all__ = [
    "ENGINES",
    "Colouring",
    "RunStats",
    "blowup_subgraph",
    "certified_bounds",
    "colour",
    "colour_path_clique_via_blowup",
    "colour_ttree_maxdeg",
    "colour_ttree_path",
    "colour_ttree_path_clique",
    "forbidden_sets",
    "resolve_variant",
]
