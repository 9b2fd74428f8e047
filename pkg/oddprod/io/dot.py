"""
GraphViz DOT export of product subgraphs
"""

from typing import Optional

import graphviz

from oddprod.core.colouring.base import Colouring
from oddprod.core.product.subgraph import ProductSubgraph


def export_dot(graph: ProductSubgraph, colouring: Optional[Colouring] = None) -> str:
    """
    DOT source with one node per vertex, labelled "(i,j[,k])".

    Nodes are named v1..vn in lex order and edges follow the canonical edge
    order, so the output is stable for diff-based tests. With a colouring,
    each node carries its colour index in a ``colour`` attribute.
    """
    dot = graphviz.Graph(name="G")
    position = graph.position
    for p, v in enumerate(graph.vertices, start=1):
        attrs = {"label": str(v)}
        if colouring is not None:
            attrs["colour"] = str(colouring[v])
        dot.node(f"v{p}", **attrs)
    for a, b in graph.edges:
        if a in position and b in position:
            dot.edge(f"v{position[a] + 1}", f"v{position[b] + 1}")
    return dot.source
