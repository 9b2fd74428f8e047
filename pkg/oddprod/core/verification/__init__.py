"""
Verification package
Independent checkers for properness, oddness and support-set distinctness, plus an
exact oracle for small graphs
"""

from oddprod.core.verification.oracle import GenericGraph, exact_odd_chromatic
from oddprod.core.verification.verifiers import (
    OddWitness,
    verify_odd,
    verify_proper,
    verify_support_distinct,
)

__all__ = [
    "GenericGraph",
    "OddWitness",
    "exact_odd_chromatic",
    "verify_odd",
    "verify_proper",
    "verify_support_distinct",
]
