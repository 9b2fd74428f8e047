"""
Variant Configuration - Single Source of Truth

Defines the secondary-factor kinds, the CLI variant names that select them, and
the palette sizes and forbidden-set ceilings each colouring engine certifies.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict


class FactorKind(Enum):
    """Shape of the second product factor"""

    PATH = "path"
    PATH_CLIQUE = "path_clique"
    GENERAL = "general"


class Variant(Enum):
    """Colouring engines selectable from the command line"""

    THM1 = "thm1"
    THM3 = "thm3"
    THM4 = "thm4"
    THM3_BLOWUP = "thm3-blowup"


# Which factor kind each variant accepts
VARIANT_FACTOR: Dict[Variant, FactorKind] = {
    Variant.THM1: FactorKind.PATH,
    Variant.THM3: FactorKind.PATH_CLIQUE,
    Variant.THM4: FactorKind.GENERAL,
    Variant.THM3_BLOWUP: FactorKind.PATH_CLIQUE,
}

# Default engine per factor kind
DEFAULT_VARIANT: Dict[FactorKind, Variant] = {
    FactorKind.PATH: Variant.THM1,
    FactorKind.PATH_CLIQUE: Variant.THM3,
    FactorKind.GENERAL: Variant.THM4,
}


@dataclass(frozen=True)
class Bounds:
    """Palette size and the per-step ceilings on |X| and |Y|"""

    palette: int
    max_x: int
    max_y: int

    @property
    def max_xy(self) -> int:
        return self.palette - 1


def path_bounds(t: int) -> Bounds:
    """Host of width t times a path: 8t+4 colours, |X| <= 5t+2, |Y| <= 3t+1"""
    return Bounds(palette=8 * t + 4, max_x=5 * t + 2, max_y=3 * t + 1)


def path_clique_bounds(t: int, ell: int) -> Bounds:
    """Host times path times K_ell: 8lt+5l-1 colours"""
    return Bounds(
        palette=8 * ell * t + 5 * ell - 1,
        max_x=5 * ell * t + 3 * ell - 1,
        max_y=3 * ell * t + 2 * ell - 1,
    )


def blowup_bounds(t: int, ell: int) -> Bounds:
    """Path bounds for the (l(t+1)-1)-wide host H times K_ell"""
    return path_bounds(ell * (t + 1) - 1)


def general_bounds(t: int, delta: int) -> Bounds:
    """Host times a graph of maximum degree delta: (d^2+d)(t+1)+2t+1 colours"""
    return Bounds(
        palette=(delta * delta + delta) * (t + 1) + 2 * t + 1,
        max_x=(t + 1) * (delta * delta + 1) - 1,
        max_y=(t + 1) * (delta + 1) - 1,
    )


def bounds_for(variant: Variant, t: int, ell: int = 1, delta: int = 0) -> Bounds:
    """Look up the certified bounds for a variant"""
    if variant is Variant.THM1:
        return path_bounds(t)
    if variant is Variant.THM3:
        return path_clique_bounds(t, ell)
    if variant is Variant.THM3_BLOWUP:
        return blowup_bounds(t, ell)
    return general_bounds(t, delta)
