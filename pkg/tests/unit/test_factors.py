"""
Unit tests for core/product/factors module
"""

import networkx as nx
import pytest

from oddprod.config.variants import FactorKind
from oddprod.core.product.factors import (
    FACTOR_GRAPHS,
    ProductVertex,
    SecondaryFactor,
    cycle_graph,
    factor_graph,
    random_bounded_degree_graph,
    validate_factor,
)
from oddprod.utils.errors import InvalidParameterError


class TestProductVertex:
    """Test suite for ProductVertex"""

    def test_str(self):
        assert str(ProductVertex(2, 3)) == "(2,3)"
        assert str(ProductVertex(2, 3, 1)) == "(2,3,1)"

    def test_coords(self):
        assert ProductVertex(1, 4).coords() == [1, 4]
        assert ProductVertex(1, 4, 2).coords() == [1, 4, 2]

    def test_order_is_lexicographic(self):
        """Test tuple order puts (i, j) first, then k"""
        vertices = [ProductVertex(2, 1), ProductVertex(1, 3), ProductVertex(1, 2)]
        assert sorted(vertices) == [ProductVertex(1, 2), ProductVertex(1, 3), ProductVertex(2, 1)]

    def test_equal_to_plain_tuple(self):
        assert ProductVertex(1, 2) == (1, 2, None)


class TestSecondaryFactor:
    """Test suite for SecondaryFactor"""

    def test_path_neighbours_skip_sentinels(self):
        """Test y_0 and y_{h+1} never appear"""
        path = SecondaryFactor.path(3)

        assert path.neighbours(1) == {2}
        assert path.neighbours(2) == {1, 3}
        assert path.neighbours(3) == {2}

    def test_path_delta(self):
        assert SecondaryFactor.path(1).delta == 0
        assert SecondaryFactor.path(2).delta == 1
        assert SecondaryFactor.path(7).delta == 2

    def test_path_clique_flags(self):
        factor = SecondaryFactor.path_clique(4, 3)

        assert factor.has_clique
        assert factor.ell == 3

    def test_general_delta(self):
        factor = SecondaryFactor.general([[2, 3], [1], [1]])

        assert factor.kind is FactorKind.GENERAL
        assert factor.h == 3
        assert factor.delta == 2

    def test_balls(self):
        """Test closed neighbourhoods and radius-2 balls on a path I"""
        factor = SecondaryFactor.from_networkx(nx.path_graph(6))

        assert factor.closed_neighbourhoods[2] == (2, 3, 4)
        assert factor.balls2[2] == (1, 2, 3, 4, 5)
        assert len(factor.balls2[0]) == 3

    def test_from_networkx_relabels(self):
        """Test nodes are renumbered 1..h in sorted order"""
        graph = nx.Graph([("a", "b"), ("b", "c")])
        factor = SecondaryFactor.from_networkx(graph)

        assert factor.adjacency == (frozenset({2}), frozenset({1, 3}), frozenset({2}))


class TestValidateFactor:
    """Test suite for validate_factor"""

    def test_valid_factors(self):
        assert validate_factor(SecondaryFactor.path(0)).ok
        assert validate_factor(SecondaryFactor.path_clique(3, 2)).ok
        assert validate_factor(SecondaryFactor.general([[2], [1]])).ok

    def test_asymmetric_adjacency(self):
        factor = SecondaryFactor.general([[2], []])
        assert "factor.symmetry" in validate_factor(factor).rules()

    def test_loop(self):
        factor = SecondaryFactor.general([[1]])
        assert validate_factor(factor).rules() == ["factor.loop"]

    def test_neighbour_out_of_range(self):
        factor = SecondaryFactor.general([[3], [1]])
        assert "factor.range" in validate_factor(factor).rules()

    def test_bad_ell(self):
        factor = SecondaryFactor(kind=FactorKind.PATH_CLIQUE, h=2, ell=0)
        assert "factor.ell" in validate_factor(factor).rules()


class TestFactorGraphs:
    """Test suite for the named factor families"""

    @pytest.mark.parametrize("name", FACTOR_GRAPHS)
    def test_every_family_builds(self, name):
        graph = factor_graph(name, 5, max_degree=3, seed=1)
        assert graph.number_of_nodes() >= 1

    def test_single_and_k2(self):
        assert factor_graph("single", 9).number_of_nodes() == 1
        assert factor_graph("k2", 9).number_of_edges() == 1

    def test_cycle_needs_three(self):
        with pytest.raises(InvalidParameterError):
            cycle_graph(2)

    def test_unknown_family(self):
        with pytest.raises(InvalidParameterError) as exc_info:
            factor_graph("star", 4)
        assert exc_info.value.rule_id == "param.factor"

    @pytest.mark.parametrize("seed", range(10))
    def test_random_respects_degree_cap(self, seed):
        graph = random_bounded_degree_graph(12, 3, seed)
        assert max(d for _, d in graph.degree()) <= 3

    def test_random_is_deterministic(self):
        a = random_bounded_degree_graph(10, 3, seed=2)
        b = random_bounded_degree_graph(10, 3, seed=2)
        assert sorted(a.edges()) == sorted(b.edges())
