"""
Product graph package
Factors, product subgraphs, and the support/risk set templates of the colouring engines
"""

from oddprod.core.product.factors import (
    FACTOR_GRAPHS,
    ProductVertex,
    SecondaryFactor,
    factor_graph,
    random_bounded_degree_graph,
    validate_factor,
)
from oddprod.core.product.sets import (
    lex_key,
    risk_set,
    support_owners,
    support_set,
)
from oddprod.core.product.subgraph import (
    ProductSubgraph,
    check_vertex,
    full_product,
    induced_subgraph,
    product_adjacent,
    sample_subgraph,
    validate_subgraph,
)

__all__ = [
    "FACTOR_GRAPHS",
    "ProductSubgraph",
    "ProductVertex",
    "SecondaryFactor",
    "check_vertex",
    "factor_graph",
    "full_product",
    "induced_subgraph",
    "lex_key",
    "product_adjacent",
    "random_bounded_degree_graph",
    "risk_set",
    "sample_subgraph",
    "support_owners",
    "support_set",
    "validate_factor",
    "validate_subgraph",
]
