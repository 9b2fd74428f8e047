"""
oddprod: proper odd colourings of subgraphs of strong products H x P,
H x P x K_l and H x I, where H has bounded treewidth

Usage:
    from oddprod import generate_instance, colour
    graph = generate_instance(t=2, r=10, h=8, seed=1)
    colouring, stats = colour(graph)
"""

from oddprod.api import colour_file, generate_instance
from oddprod.core.colouring import colour

__version__ = "0.1.0"
__all__ = ["colour", "colour_file", "generate_instance", "__version__"]
