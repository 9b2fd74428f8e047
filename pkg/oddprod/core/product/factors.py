"""
Second product factors and product vertices
The second factor is a path P on 1..h, a path times a clique K_ell, or a general
graph I of bounded maximum degree
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from oddprod.config.variants import FactorKind
from oddprod.core.report import ValidationReport
from oddprod.utils.errors import InvalidParameterError

logger = logging.getLogger(__name__)


class ProductVertex(NamedTuple):
    """
    A vertex (x_i, y_j) or (x_i, y_j, z_k) of the strong product.

    ``k`` is None unless the second factor is a path times a clique. Tuple
    ordering is the processing (lexicographic) order.
    """

    i: int
    j: int
    k: Optional[int] = None

    def __str__(self) -> str:
        if self.k is None:
            return f"({self.i},{self.j})"
        return f"({self.i},{self.j},{self.k})"

    def coords(self) -> List[int]:
        return [self.i, self.j] if self.k is None else [self.i, self.j, self.k]


@dataclass(frozen=True)
class SecondaryFactor:
    """
    The factor multiplied with the host.

    For PATH and PATH_CLIQUE only ``h`` (and ``ell``) matter; the path
    sentinels y_0 and y_{h+1} exist only as out-of-range indices. For GENERAL,
    ``adjacency[j - 1]`` holds the neighbours of y_j in I.
    """

    kind: FactorKind
    h: int
    ell: int = 1
    adjacency: Tuple[FrozenSet[int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(
            self, "adjacency", tuple(frozenset(int(x) for x in nb) for nb in self.adjacency)
        )

    @classmethod
    def path(cls, h: int) -> "SecondaryFactor":
        return cls(kind=FactorKind.PATH, h=h)

    @classmethod
    def path_clique(cls, h: int, ell: int) -> "SecondaryFactor":
        return cls(kind=FactorKind.PATH_CLIQUE, h=h, ell=ell)

    @classmethod
    def general(cls, adjacency: Sequence[Iterable[int]]) -> "SecondaryFactor":
        rows = tuple(frozenset(a) for a in adjacency)
        return cls(kind=FactorKind.GENERAL, h=len(rows), adjacency=rows)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SecondaryFactor":
        """Build a GENERAL factor; nodes are relabelled 1..h in sorted order"""
        order = sorted(graph.nodes())
        index = {node: position for position, node in enumerate(order, start=1)}
        adjacency = [
            frozenset(index[nb] for nb in graph.neighbors(node) if nb != node) for node in order
        ]
        return cls.general(adjacency)

    @property
    def has_clique(self) -> bool:
        return self.kind is FactorKind.PATH_CLIQUE

    @cached_property
    def delta(self) -> int:
        """Maximum degree of the factor (2 for paths with h >= 3)"""
        if self.kind is FactorKind.GENERAL:
            return max((len(nb) for nb in self.adjacency), default=0)
        return min(max(self.h - 1, 0), 2)

    def neighbours(self, j: int) -> FrozenSet[int]:
        """N(y_j) inside 1..h"""
        if self.kind is FactorKind.GENERAL:
            return self.adjacency[j - 1]
        return frozenset(x for x in (j - 1, j + 1) if 1 <= x <= self.h)

    def adjacent(self, a: int, b: int) -> bool:
        if self.kind is FactorKind.GENERAL:
            return b in self.adjacency[a - 1]
        return abs(a - b) == 1

    @cached_property
    def closed_neighbourhoods(self) -> Tuple[Tuple[int, ...], ...]:
        """``[j - 1]`` is {y_j} + N(y_j), sorted"""
        return tuple(
            tuple(sorted({j} | self.neighbours(j))) for j in range(1, self.h + 1)
        )

    @cached_property
    def balls2(self) -> Tuple[Tuple[int, ...], ...]:
        """``[j - 1]`` is the closed radius-2 ball around y_j, sorted"""
        balls = []
        for j in range(1, self.h + 1):
            ball = set(self.closed_neighbourhoods[j - 1])
            for x in self.neighbours(j):
                ball.update(self.neighbours(x))
            balls.append(tuple(sorted(ball)))
        return tuple(balls)


def validate_factor(factor: SecondaryFactor) -> ValidationReport:
    """Check ranges, and symmetry / loop-freeness of a general factor"""
    report = ValidationReport()
    if factor.h < 0:
        report.add("factor.h", (factor.h,), f"h={factor.h} must be >= 0")
    if factor.ell < 1:
        report.add("factor.ell", (factor.ell,), f"ell={factor.ell} must be >= 1")
    if factor.kind is not FactorKind.PATH_CLIQUE and factor.ell != 1:
        only = FactorKind.PATH_CLIQUE.value
        report.add("factor.ell", (factor.ell,), f"ell is only meaningful for {only}")
    if factor.kind is not FactorKind.GENERAL:
        return report

    if len(factor.adjacency) != factor.h:
        report.add(
            "factor.shape",
            (factor.h,),
            f"adjacency has {len(factor.adjacency)} rows for h={factor.h}",
        )
        return report
    for j, nbs in enumerate(factor.adjacency, start=1):
        for x in sorted(nbs):
            if x == j:
                report.add("factor.loop", (j,), f"y_{j} is adjacent to itself")
            elif not 1 <= x <= factor.h:
                report.add(
                    "factor.range", (j, x), f"y_{j} lists neighbour {x} outside 1..{factor.h}"
                )
            elif j not in factor.adjacency[x - 1]:
                report.add(
                    "factor.symmetry", (j, x), f"y_{j} lists {x} but y_{x} does not list {j}"
                )
    return report


def single_vertex_graph() -> nx.Graph:
    return nx.empty_graph(1)


def k2_graph() -> nx.Graph:
    return nx.complete_graph(2)


def path_graph(h: int) -> nx.Graph:
    return nx.path_graph(h)


def cycle_graph(h: int) -> nx.Graph:
    if h < 3:
        raise InvalidParameterError(
            f"a cycle needs at least 3 vertices, got {h}", rule_id="param.h"
        )
    return nx.cycle_graph(h)


def random_bounded_degree_graph(
    h: int, max_degree: int, seed: int, density: float = 0.5
) -> nx.Graph:
    """
    Random graph on h vertices with maximum degree at most ``max_degree``.

    Candidate pairs are visited in a seeded random order; each is kept with
    probability ``density`` when both endpoints still have spare degree.
    """
    if h < 1 or max_degree < 0:
        raise InvalidParameterError(
            f"need h >= 1 and max_degree >= 0, got h={h}, max_degree={max_degree}",
            rule_id="param.factor",
        )
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(h), 2))
    order = rng.permutation(len(pairs)) if pairs else []
    keep = rng.random(len(pairs)) < density
    degree = [0] * h

    graph = nx.empty_graph(h)
    for position in order:
        a, b = pairs[position]
        if keep[position] and degree[a] < max_degree and degree[b] < max_degree:
            graph.add_edge(a, b)
            degree[a] += 1
            degree[b] += 1
    return graph


FACTOR_GRAPHS = ("single", "k2", "path", "cycle", "random")


def factor_graph(name: str, h: int, max_degree: int = 3, seed: int = 0) -> nx.Graph:
    """Build one of the named factor families used by the generators and the bench"""
    if name == "single":
        return single_vertex_graph()
    if name == "k2":
        return k2_graph()
    if name == "path":
        return path_graph(h)
    if name == "cycle":
        return cycle_graph(h)
    if name == "random":
        return random_bounded_degree_graph(h, max_degree, seed)
    raise InvalidParameterError(
        f"unknown factor graph {name!r}; expected one of {', '.join(FACTOR_GRAPHS)}",
        rule_id="param.factor",
    )
