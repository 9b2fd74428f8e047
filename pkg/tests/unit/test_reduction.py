"""
Unit tests for the clique blow-up route
"""

import pytest

from oddprod.core.colouring import blowup_subgraph, colour_path_clique_via_blowup
from oddprod.core.host import random_t_tree
from oddprod.core.product import (
    ProductVertex,
    SecondaryFactor,
    full_product,
    sample_subgraph,
    validate_subgraph,
)
from oddprod.core.verification import verify_odd, verify_proper
from oddprod.utils.errors import ContractError


class TestBlowupSubgraph:
    """Test suite for blowup_subgraph"""

    def test_image_is_valid_path_instance(self, random_clique_instance):
        mapped, image = blowup_subgraph(random_clique_instance)

        assert mapped.secondary == SecondaryFactor.path(random_clique_instance.secondary.h)
        assert mapped.n == random_clique_instance.n
        assert mapped.m == random_clique_instance.m
        assert validate_subgraph(mapped).ok

    def test_vertex_map(self, single_host):
        graph = full_product(single_host, SecondaryFactor.path_clique(2, 3))
        _, image = blowup_subgraph(graph)

        assert image[ProductVertex(1, 2, 3)] == ProductVertex(3, 2)
        assert image[ProductVertex(1, 1, 1)] == ProductVertex(1, 1)

    def test_width(self, random_clique_instance):
        mapped, _ = blowup_subgraph(random_clique_instance)
        t, ell = random_clique_instance.host.t, random_clique_instance.secondary.ell
        assert mapped.host.t == ell * (t + 1) - 1

    def test_needs_clique_factor(self, random_path_instance):
        with pytest.raises(ContractError):
            blowup_subgraph(random_path_instance)


class TestColourViaBlowup:
    """Test suite for colour_path_clique_via_blowup"""

    @pytest.mark.parametrize("t,ell", [(1, 1), (1, 2), (2, 2), (1, 3)])
    def test_proper_and_odd(self, t, ell):
        host = random_t_tree(t, 6, seed=t + ell)
        graph = sample_subgraph(host, SecondaryFactor.path_clique(4, ell), 0.8, 0.8, seed=ell)
        colouring, stats = colour_path_clique_via_blowup(graph)

        assert colouring.palette == 8 * ell * t + 8 * ell - 4
        assert stats.colours_used <= colouring.palette
        assert verify_proper(graph, colouring).ok
        assert verify_odd(graph, colouring)[0].ok

    def test_palette_override(self, random_clique_instance):
        colouring, _ = colour_path_clique_via_blowup(random_clique_instance, palette=60)
        assert colouring.palette == 60
