"""
Unit tests for DOT export
"""

from oddprod.core.colouring import colour
from oddprod.core.product import ProductVertex, ProductSubgraph, SecondaryFactor
from oddprod.io.dot import export_dot


class TestExportDot:
    """Test suite for export_dot"""

    def test_empty_graph(self, empty_graph):
        """Test an empty instance gives just the graph header and footer"""
        lines = [line for line in export_dot(empty_graph).splitlines() if line.strip()]
        assert lines == ["graph G {", "}"]

    def test_k2(self, single_host):
        a, b = ProductVertex(1, 1), ProductVertex(1, 2)
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path(2), [a, b], [(a, b)])
        source = export_dot(graph)

        assert source.count("label=") == 2
        assert source.count(" -- ") == 1
        assert 'label="(1,1)"' in source

    def test_colours_as_attributes(self, path3_graph):
        colouring, _ = colour(path3_graph)
        source = export_dot(path3_graph, colouring)

        for p, c in enumerate([1, 2, 3], start=1):
            assert f"v{p} [" in source
            assert f"colour={c}" in source

    def test_stable(self, random_path_instance):
        assert export_dot(random_path_instance) == export_dot(random_path_instance)

    def test_clique_labels(self, single_host):
        graph = ProductSubgraph.build(single_host, SecondaryFactor.path_clique(1, 2), [(1, 1, 2)])
        assert 'label="(1,1,2)"' in export_dot(graph)
