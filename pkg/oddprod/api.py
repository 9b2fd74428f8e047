"""oddprod public API"""

from pathlib import Path
from typing import Optional, Tuple, Union

from oddprod.config.variants import FactorKind, Variant
from oddprod.core.colouring import Colouring, RunStats, colour
from oddprod.core.host import random_t_tree
from oddprod.core.product import ProductSubgraph, SecondaryFactor, factor_graph, sample_subgraph
from oddprod.io.documents import load_instance


def generate_instance(
    t: int,
    r: int,
    h: int,
    kind: FactorKind = FactorKind.PATH,
    ell: int = 1,
    factor: str = "path",
    max_degree: int = 3,
    q_vertex: float = 1.0,
    p_edge: float = 1.0,
    seed: int = 0,
) -> ProductSubgraph:
    """
    Generate a random instance: a random t-tree host, a secondary factor and a
    sampled subgraph of their strong product.

    Args:
        t: Host width
        r: Host vertex count (>= t + 1)
        h: Path length, or vertex count of the general factor
        kind: Factor kind
        ell: Clique size for path_clique factors
        factor: Named family for general factors (single, k2, path, cycle, random)
        max_degree: Degree cap for the random general factor
        q_vertex: Vertex survival probability
        p_edge: Edge survival probability
        seed: Seed shared by every random choice

    Returns:
        A validated ProductSubgraph.
    """
    host = random_t_tree(t, r, seed)
    if kind is FactorKind.PATH:
        secondary = SecondaryFactor.path(h)
    elif kind is FactorKind.PATH_CLIQUE:
        secondary = SecondaryFactor.path_clique(h, ell)
    else:
        secondary = SecondaryFactor.from_networkx(factor_graph(factor, h, max_degree, seed))
    return sample_subgraph(host, secondary, q_vertex, p_edge, seed)


def colour_file(
    path: Union[str, Path],
    variant: Optional[Variant] = None,
    palette: Optional[int] = None,
) -> Tuple[ProductSubgraph, Colouring, RunStats]:
    """
    Load an instance document and colour it.

    Returns:
        The loaded graph, its colouring and the run telemetry.
    """
    graph = load_instance(Path(path).read_text(encoding="utf-8"))
    colouring, stats = colour(graph, variant=variant, palette=palette)
    return graph, colouring, stats
