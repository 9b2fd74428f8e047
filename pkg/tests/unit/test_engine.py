"""
Unit tests for the forward greedy colouring engine
"""

import logging

import networkx as nx
import pytest

from oddprod.config.variants import Variant, general_bounds, path_clique_bounds
from oddprod.core.colouring import (
    Colouring,
    certified_bounds,
    colour,
    colour_ttree_maxdeg,
    colour_ttree_path,
    colour_ttree_path_clique,
    forbidden_sets,
    resolve_variant,
)
from oddprod.core.host import random_t_tree
from oddprod.core.product import (
    ProductSubgraph,
    ProductVertex,
    SecondaryFactor,
    full_product,
    sample_subgraph,
)
from oddprod.core.verification import verify_odd, verify_proper, verify_support_distinct
from oddprod.utils.errors import ContractError, PaletteExhaustedError

V = ProductVertex


def _prefix(colouring, graph, v):
    p = graph.position[v]
    return Colouring(
        palette=colouring.palette,
        assignment={w: colouring[w] for w in graph.vertices[:p]},
    )


def _assert_correct(graph, colouring):
    assert verify_proper(graph, colouring).ok
    assert verify_odd(graph, colouring)[0].ok
    assert verify_support_distinct(graph, colouring).ok


class TestForbiddenSets:
    """Test suite for forbidden_sets"""

    def test_first_vertex(self, path3_graph):
        x, y = forbidden_sets(path3_graph, V(1, 1), Colouring(palette=12))
        assert x == set() and y == set()

    def test_host_edge(self, edge_host):
        """Test X={1}, Y={} for the edge (1,1)-(2,1)"""
        a, b = V(1, 1), V(2, 1)
        graph = ProductSubgraph.build(edge_host, SecondaryFactor.path(1), [a, b], [(a, b)])

        x, y = forbidden_sets(graph, b, Colouring(palette=12, assignment={a: 1}))
        assert x == {1}
        assert y == set()

    def test_path_end(self, path3_graph):
        """Test X={1,2}, Y={1}: the middle vertex sees colour 1 exactly once"""
        partial = Colouring(palette=12, assignment={V(1, 1): 1, V(1, 2): 2})
        x, y = forbidden_sets(path3_graph, V(1, 3), partial)

        assert x == {1, 2}
        assert y == {1}

    def test_wrong_prefix(self, path3_graph):
        partial = Colouring(palette=12, assignment={V(1, 1): 1})
        with pytest.raises(ContractError) as exc_info:
            forbidden_sets(path3_graph, V(1, 3), partial)
        assert exc_info.value.rule_id == "contract.prefix"

    def test_vertex_not_in_graph(self, empty_graph):
        with pytest.raises(ContractError) as exc_info:
            forbidden_sets(empty_graph, V(1, 1), Colouring(palette=12))
        assert exc_info.value.rule_id == "contract.vertex"

    @pytest.mark.parametrize(
        "fixture", ["random_path_instance", "random_clique_instance", "random_general_instance"]
    )
    def test_greedy_picks_smallest_free_colour(self, fixture, request):
        """Test the incremental engine agrees with a from-scratch recount at every step"""
        graph = request.getfixturevalue(fixture)
        colouring, _ = colour(graph)
        for v in graph.vertices:
            x, y = forbidden_sets(graph, v, _prefix(colouring, graph, v))
            expected = min(c for c in range(1, colouring.palette + 1) if c not in x | y)
            assert colouring[v] == expected


class TestColourTtreePath:
    """Test suite for colour_ttree_path"""

    def test_empty(self, empty_graph):
        colouring, stats = colour_ttree_path(empty_graph)

        assert len(colouring) == 0
        assert stats.colours_used == 0

    def test_single_vertex(self, single_host):
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path(1), [V(1, 1)])
        colouring, _ = colour_ttree_path(graph)
        assert colouring.assignment == {V(1, 1): 1}

    def test_path_of_three(self, path3_graph):
        colouring, stats = colour_ttree_path(path3_graph)

        assert colouring.assignment == {V(1, 1): 1, V(1, 2): 2, V(1, 3): 3}
        assert colouring.palette == 12
        assert stats.colours_used == 3
        assert stats.steps == 3

    def test_variant_mismatch(self, random_clique_instance):
        with pytest.raises(ContractError) as exc_info:
            colour_ttree_path(random_clique_instance)
        assert exc_info.value.rule_id == "variant.mismatch"

    def test_palette_override_can_exhaust(self, path3_graph):
        with pytest.raises(PaletteExhaustedError) as exc_info:
            colour_ttree_path(path3_graph, palette=2)

        assert exc_info.value.vertex == V(1, 3)
        assert exc_info.value.palette == 2

    def test_palette_override_warns(self, path3_graph, caplog):
        with caplog.at_level(logging.WARNING, logger="oddprod.core.colouring.engine"):
            colouring, _ = colour_ttree_path(path3_graph, palette=5)
        assert colouring.palette == 5
        assert "below the certified bound" in caplog.text

    def test_full_product(self, full_path_product):
        colouring, stats = colour_ttree_path(full_path_product)

        _assert_correct(full_path_product, colouring)
        assert stats.max_x <= 5 * 1 + 2
        assert stats.max_y <= 3 * 1 + 1
        assert stats.max_xy <= stats.max_x + stats.max_y

    def test_deterministic(self, random_path_instance):
        first = colour_ttree_path(random_path_instance)
        second = colour_ttree_path(random_path_instance)
        assert first == second


class TestColourTtreePathClique:
    """Test suite for colour_ttree_path_clique"""

    def test_single_vertex(self, single_host):
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path_clique(1, 1), [V(1, 1, 1)])
        colouring, _ = colour_ttree_path_clique(graph)
        assert colouring[V(1, 1, 1)] == 1

    def test_triangle_host(self, triangle_host):
        """Test the full product of a triangle, P_2 and K_2 stays within 41 colours"""
        graph = full_product(triangle_host, SecondaryFactor.path_clique(2, 2))
        colouring, stats = colour_ttree_path_clique(graph)

        assert colouring.palette == 41
        assert stats.colours_used <= 41
        _assert_correct(graph, colouring)

    def test_collapse_at_ell_one(self):
        """Test ell=1 reproduces the path engine vertex by vertex"""
        host = random_t_tree(2, 8, seed=13)
        path_graph = sample_subgraph(host, SecondaryFactor.path(5), 0.8, 0.8, seed=13)
        lifted = ProductSubgraph.build(
            host,
            SecondaryFactor.path_clique(5, 1),
            [(v.i, v.j, 1) for v in path_graph.vertices],
            [((a.i, a.j, 1), (b.i, b.j, 1)) for a, b in path_graph.edges],
        )
        path_colouring, _ = colour_ttree_path(path_graph)
        clique_colouring, _ = colour_ttree_path_clique(lifted)

        assert clique_colouring.palette == path_colouring.palette
        for v in path_graph.vertices:
            assert clique_colouring[V(v.i, v.j, 1)] == path_colouring[v]

    def test_bounds(self, random_clique_instance):
        colouring, stats = colour_ttree_path_clique(random_clique_instance)
        bounds = path_clique_bounds(1, 2)

        _assert_correct(random_clique_instance, colouring)
        assert stats.max_x <= bounds.max_x
        assert stats.max_y <= bounds.max_y


class TestColourTtreeMaxdeg:
    """Test suite for colour_ttree_maxdeg"""

    def _graph(self, factor_graph, t=2, seed=0):
        host = random_t_tree(t, 7, seed)
        return full_product(host, SecondaryFactor.from_networkx(factor_graph))

    def test_single_vertex_factor(self):
        graph = self._graph(nx.empty_graph(1))
        colouring, _ = colour_ttree_maxdeg(graph)

        assert colouring.palette == 2 * 2 + 1
        assert verify_proper(graph, colouring).ok
        assert verify_odd(graph, colouring)[0].ok

    def test_k2_factor(self):
        graph = self._graph(nx.complete_graph(2))
        colouring, _ = colour_ttree_maxdeg(graph)
        assert colouring.palette == 4 * 2 + 3

    def test_path_factor(self):
        graph = self._graph(nx.path_graph(5))
        colouring, stats = colour_ttree_maxdeg(graph)
        bounds = general_bounds(2, 2)

        assert colouring.palette == 8 * 2 + 7
        _assert_correct(graph, colouring)
        assert stats.max_x <= bounds.max_x
        assert stats.max_y <= bounds.max_y

    def test_variant_mismatch(self, random_path_instance):
        with pytest.raises(ContractError):
            colour_ttree_maxdeg(random_path_instance)


class TestDispatch:
    """Test suite for variant dispatch"""

    def test_default_variant_per_kind(
        self, random_path_instance, random_clique_instance, random_general_instance
    ):
        assert resolve_variant(random_path_instance) is Variant.THM1
        assert resolve_variant(random_clique_instance) is Variant.THM3
        assert resolve_variant(random_general_instance) is Variant.THM4

    def test_mismatch(self, random_path_instance):
        with pytest.raises(ContractError):
            colour(random_path_instance, variant=Variant.THM4)

    def test_certified_bounds(self, random_general_instance):
        delta = random_general_instance.secondary.delta
        expected = general_bounds(random_general_instance.host.t, delta)
        assert certified_bounds(random_general_instance) == expected

    def test_blowup_variant(self, random_clique_instance):
        colouring, _ = colour(random_clique_instance, variant=Variant.THM3_BLOWUP)
        assert colouring.palette == 8 * 2 * 1 + 8 * 2 - 4
