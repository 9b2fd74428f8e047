"""
Unit tests for core/product/subgraph module
"""

import pytest

from oddprod.core.host import path_host, random_t_tree
from oddprod.core.product import (
    ProductSubgraph,
    ProductVertex,
    SecondaryFactor,
    check_vertex,
    full_product,
    induced_subgraph,
    product_adjacent,
    sample_subgraph,
    validate_subgraph,
)
from oddprod.core.product.subgraph import vertex_space
from oddprod.utils.errors import InvalidParameterError, InvalidVertexError

V = ProductVertex


class TestProductAdjacent:
    """Test suite for strong-product adjacency"""

    def test_same_row_consecutive(self, edge_host):
        assert product_adjacent(edge_host, SecondaryFactor.path(3), (1, 1), (1, 2))

    def test_no_loops(self, edge_host):
        assert not product_adjacent(edge_host, SecondaryFactor.path(3), (1, 1), (1, 1))

    def test_diagonal(self, edge_host):
        """Test host edge plus path edge is adjacent; path distance 2 is not"""
        path = SecondaryFactor.path(3)

        assert product_adjacent(edge_host, path, (1, 1), (2, 2))
        assert not product_adjacent(edge_host, path, (1, 1), (2, 3))

    def test_non_edge_in_host(self):
        host = path_host(3)
        assert not product_adjacent(host, SecondaryFactor.path(2), (1, 1), (3, 1))

    def test_clique_coordinate(self, edge_host):
        """Test any two clique indices are compatible"""
        factor = SecondaryFactor.path_clique(2, 3)

        assert product_adjacent(edge_host, factor, (1, 1, 1), (1, 1, 3))
        assert product_adjacent(edge_host, factor, (1, 1, 2), (2, 2, 1))

    def test_symmetric(self):
        host = random_t_tree(2, 6, seed=1)
        factor = SecondaryFactor.path(3)
        space = list(vertex_space(host, factor))
        for u in space:
            for v in space:
                assert product_adjacent(host, factor, u, v) == product_adjacent(host, factor, v, u)

    def test_out_of_range(self, edge_host):
        with pytest.raises(InvalidVertexError):
            product_adjacent(edge_host, SecondaryFactor.path(3), (1, 1), (1, 4))


class TestCheckVertex:
    """Test suite for check_vertex"""

    def test_coerces(self, edge_host):
        assert check_vertex(edge_host, SecondaryFactor.path(2), [2, 1]) == V(2, 1)

    def test_missing_k(self, edge_host):
        with pytest.raises(InvalidVertexError):
            check_vertex(edge_host, SecondaryFactor.path_clique(2, 2), (1, 1))

    def test_unexpected_k(self, edge_host):
        with pytest.raises(InvalidVertexError):
            check_vertex(edge_host, SecondaryFactor.path(2), (1, 1, 1))

    def test_k_range(self, edge_host):
        with pytest.raises(InvalidVertexError):
            check_vertex(edge_host, SecondaryFactor.path_clique(2, 2), (1, 1, 3))


class TestProductSubgraph:
    """Test suite for ProductSubgraph construction and queries"""

    def test_build_sorts_and_orients(self, single_host):
        a, b, c = V(1, 1), V(1, 2), V(1, 3)
        graph = ProductSubgraph.build(
            single_host, SecondaryFactor.path(3), [c, a, b], [(c, b), (b, a)]
        )

        assert graph.vertices == (a, b, c)
        assert graph.edges == ((a, b), (b, c))

    def test_queries(self, path3_graph):
        middle = V(1, 2)

        assert path3_graph.n == 3
        assert path3_graph.m == 2
        assert path3_graph.neighbours(middle) == {V(1, 1), V(1, 3)}
        assert path3_graph.degree(V(1, 1)) == 1
        assert middle in path3_graph
        assert path3_graph.back_adjacency == ((), (0,), (1,))


class TestValidateSubgraph:
    """Test suite for validate_subgraph"""

    def test_empty_ok(self, empty_graph):
        assert validate_subgraph(empty_graph).ok

    def test_distance_two_edge(self, single_host):
        a, c = V(1, 1), V(1, 3)
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path(3), [a, c], [(a, c)])

        assert validate_subgraph(graph).rules() == ["subgraph.adjacency"]

    def test_dangling_endpoint(self, single_host):
        a, b = V(1, 1), V(1, 2)
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path(3), [a], [(a, b)])

        assert validate_subgraph(graph).rules() == ["subgraph.endpoint"]

    def test_loop_and_duplicate(self, single_host):
        a, b = V(1, 1), V(1, 2)
        graph = ProductSubgraph.build(
            single_host, SecondaryFactor.path(3), [a, b], [(a, a), (a, b), (b, a)]
        )
        assert set(validate_subgraph(graph).rules()) == {"subgraph.loop", "subgraph.duplicate"}

    def test_out_of_range_vertex(self, single_host):
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path(3), [V(1, 4)], [])
        assert validate_subgraph(graph).rules() == ["subgraph.vertex"]


class TestSampleSubgraph:
    """Test suite for sample_subgraph and its shortcuts"""

    def test_full_product_counts(self, edge_host):
        """Test K_2 x P_3 has 6 vertices and 3 + 2*2 + 2*2 = 11 edges"""
        graph = full_product(edge_host, SecondaryFactor.path(3))

        assert graph.n == 6
        assert graph.m == 11
        assert validate_subgraph(graph).ok

    def test_full_clique_product(self, single_host):
        """Test P_2 x K_2 is K_4"""
        graph = full_product(single_host, SecondaryFactor.path_clique(2, 2))
        assert graph.n == 4
        assert graph.m == 6

    def test_zero_vertex_probability(self, edge_host):
        graph = sample_subgraph(edge_host, SecondaryFactor.path(5), 0.0, 1.0, seed=1)
        assert graph.n == 0 and graph.m == 0

    def test_deterministic(self):
        host = random_t_tree(2, 10, seed=4)
        factor = SecondaryFactor.path(6)

        a = sample_subgraph(host, factor, 0.7, 0.5, seed=99)
        b = sample_subgraph(host, factor, 0.7, 0.5, seed=99)
        assert a == b

    @pytest.mark.parametrize("seed", range(8))
    def test_samples_are_valid(self, seed):
        host = random_t_tree(2, 9, seed)
        for factor in (
            SecondaryFactor.path(4),
            SecondaryFactor.path_clique(3, 2),
            SecondaryFactor.general([[2], [1, 3], [2]]),
        ):
            assert validate_subgraph(sample_subgraph(host, factor, 0.6, 0.6, seed)).ok

    def test_edges_in_canonical_order(self, random_path_instance):
        edges = list(random_path_instance.edges)
        assert edges == sorted(edges, key=lambda e: (e[1], e[0]))
        assert all(a < b for a, b in edges)

    @pytest.mark.parametrize("name,value", [("q_vertex", -0.1), ("p_edge", 1.5)])
    def test_probability_range(self, edge_host, name, value):
        kwargs = {"q_vertex": 0.5, "p_edge": 0.5, name: value}
        with pytest.raises(InvalidParameterError) as exc_info:
            sample_subgraph(edge_host, SecondaryFactor.path(2), seed=0, **kwargs)
        assert exc_info.value.rule_id == f"param.{name}"


class TestInducedSubgraph:
    """Test suite for induced_subgraph"""

    def test_restricts_edges(self, path3_graph):
        sub = induced_subgraph(path3_graph, [V(1, 1), V(1, 2)])

        assert sub.vertices == (V(1, 1), V(1, 2))
        assert sub.edges == ((V(1, 1), V(1, 2)),)

    def test_ignores_foreign_vertices(self, path3_graph):
        assert induced_subgraph(path3_graph, [V(1, 9)]).n == 0
