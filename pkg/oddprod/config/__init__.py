"""
Configuration module for oddprod
Single source of truth for variant names and palette bounds
"""

from oddprod.config.variants import (
    DEFAULT_VARIANT,
    VARIANT_FACTOR,
    Bounds,
    FactorKind,
    Variant,
    blowup_bounds,
    bounds_for,
    general_bounds,
    path_bounds,
    path_clique_bounds,
)

__all__ = [
    "DEFAULT_VARIANT",
    "VARIANT_FACTOR",
    "Bounds",
    "FactorKind",
    "Variant",
    "blowup_bounds",
    "bounds_for",
    "general_bounds",
    "path_bounds",
    "path_clique_bounds",
]
