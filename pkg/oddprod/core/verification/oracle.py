"""
Exact odd chromatic number by backtracking
Only meant for small graphs; refuses anything above the vertex cap
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import networkx as nx

from oddprod.core.product.subgraph import ProductSubgraph
from oddprod.utils.config import get_config
from oddprod.utils.errors import InvalidParameterError, OracleRefusalError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenericGraph:
    """Simple undirected graph on 1..n, independent of any product structure"""

    n: int
    edges: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        canonical = sorted({(min(a, b), max(a, b)) for a, b in self.edges})
        for a, b in canonical:
            if a == b:
                raise InvalidParameterError(f"loop at vertex {a}", rule_id="graph.loop")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise InvalidParameterError(
                    f"edge {a}-{b} outside 1..{self.n}", rule_id="graph.range"
                )
        if len(canonical) != len(self.edges):
            raise InvalidParameterError("duplicate edges", rule_id="graph.duplicate")
        object.__setattr__(self, "edges", tuple(canonical))

    @classmethod
    def complete(cls, n: int) -> "GenericGraph":
        return cls(n, tuple((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)))

    @classmethod
    def path(cls, n: int) -> "GenericGraph":
        return cls(n, tuple((a, a + 1) for a in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "GenericGraph":
        return cls(n, tuple((a, a + 1) for a in range(1, n)) + ((1, n),))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "GenericGraph":
        order = sorted(graph.nodes())
        index = {node: p for p, node in enumerate(order, start=1)}
        return cls(len(order), tuple((index[a], index[b]) for a, b in graph.edges() if a != b))

    @classmethod
    def from_product(cls, graph: ProductSubgraph) -> "GenericGraph":
        """Forget the product structure; vertex p of the lex order becomes p + 1"""
        position = graph.position
        return cls(
            graph.n,
            tuple(
                (position[a] + 1, position[b] + 1)
                for a, b in graph.edges
                if a != b and a in position and b in position
            ),
        )

    def adjacency(self) -> List[List[int]]:
        """0-based neighbour lists"""
        neighbours: List[List[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            neighbours[a - 1].append(b - 1)
            neighbours[b - 1].append(a - 1)
        return neighbours


def _has_odd_colouring(adjacency: List[List[int]], colours: int) -> bool:
    """
    Is there a proper odd colouring using at most ``colours`` colours?

    Vertex p may only open colour (highest used so far) + 1, which removes
    colour-permutation symmetry. Properness prunes every step; a vertex's
    parity is tested once its last neighbour has been coloured.
    """
    n = len(adjacency)
    completes_at: List[List[int]] = [[] for _ in range(n)]
    for w, nbs in enumerate(adjacency):
        if nbs:
            completes_at[max(nbs)].append(w)

    colour = [0] * n

    def parity_ok(w: int) -> bool:
        odd = set()
        for x in adjacency[w]:
            odd ^= {colour[x]}
        return bool(odd)

    def extend(p: int, highest: int) -> bool:
        if p == n:
            return True
        taken = {colour[q] for q in adjacency[p] if q < p}
        for c in range(1, min(colours, highest + 1) + 1):
            if c in taken:
                continue
            colour[p] = c
            if all(parity_ok(w) for w in completes_at[p]) and extend(p + 1, max(highest, c)):
                return True
        colour[p] = 0
        return False

    return extend(0, 0)


def exact_odd_chromatic(
    graph: GenericGraph,
    max_colours: int,
    vertex_cap: Optional[int] = None,
    workers: int = 1,
) -> Optional[int]:
    """
    Smallest c <= max_colours admitting a proper odd colouring with c colours.

    Args:
        graph: Input graph
        max_colours: Largest palette to try
        vertex_cap: Refuse graphs with more vertices (default from ODDPROD_ORACLE_CAP)
        workers: With more than one worker, candidate palette sizes are searched
            in parallel processes and the smallest feasible one wins

    Returns:
        The minimum palette size, or None when no c <= max_colours works

    Raises:
        OracleRefusalError: if graph.n exceeds the vertex cap
    """
    cap = vertex_cap if vertex_cap is not None else get_config().oracle_cap
    if graph.n > cap:
        raise OracleRefusalError(
            f"graph has {graph.n} vertices, above the oracle cap of {cap}; raise the cap explicitly"
        )
    if graph.n == 0:
        return 0

    adjacency = graph.adjacency()
    candidates = list(range(1, max_colours + 1))
    if workers > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            feasible = list(pool.map(_has_odd_colouring, [adjacency] * len(candidates), candidates))
        found = [c for c, ok in zip(candidates, feasible) if ok]
        result = min(found) if found else None
    else:
        result = next((c for c in candidates if _has_odd_colouring(adjacency, c)), None)

    logger.info(f"Exact odd chromatic number of {graph.n}-vertex graph: {result}")
    return result
