"""
Colourings and per-run telemetry
"""

from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, Set

from oddprod.core.product.factors import ProductVertex


@dataclass
class Colouring:
    """A map from V(G) to the palette 1..palette"""

    palette: int
    assignment: Dict[ProductVertex, int] = field(default_factory=dict)

    def __getitem__(self, v: ProductVertex) -> int:
        return self.assignment[v]

    def __contains__(self, v) -> bool:
        return v in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def __iter__(self) -> Iterator[ProductVertex]:
        return iter(self.assignment)

    @property
    def colours(self) -> Set[int]:
        return set(self.assignment.values())

    @property
    def colours_used(self) -> int:
        """Number of distinct colours actually assigned"""
        return len(self.colours)

    def recoloured(self, v: ProductVertex, colour: int) -> "Colouring":
        """Copy with one vertex recoloured (for constructing failing fixtures)"""
        assignment = dict(self.assignment)
        assignment[v] = colour
        return Colouring(palette=self.palette, assignment=assignment)


@dataclass
class RunStats:
    """Telemetry of one greedy pass: sizes of the forbidden sets X, Y and their union"""

    colours_used: int = 0
    max_x: int = 0
    max_y: int = 0
    max_xy: int = 0
    steps: int = 0

    def observe(self, x: int, y: int, xy: int) -> None:
        self.steps += 1
        if x > self.max_x:
            self.max_x = x
        if y > self.max_y:
            self.max_y = y
        if xy > self.max_xy:
            self.max_xy = xy

    def to_dict(self) -> dict:
        return asdict(self)
