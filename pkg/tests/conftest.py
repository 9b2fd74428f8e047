"""
Shared pytest fixtures for oddprod tests
"""

import pytest

from oddprod.core.host import ElimOrderedHost, path_host, random_t_tree
from oddprod.core.product import (
    ProductSubgraph,
    ProductVertex,
    SecondaryFactor,
    full_product,
    sample_subgraph,
)
from oddprod.io.documents import save_instance
from oddprod.utils.config import reload_config

ODDPROD_ENV = ("ODDPROD_WORKERS", "ODDPROD_ORACLE_CAP", "ODDPROD_OUTPUT_DIR", "ODDPROD_LOG_LEVEL")


@pytest.fixture
def triangle_host():
    """The triangle as a 2-tree"""
    return ElimOrderedHost.from_lists(2, [[], [1], [1, 2]])


@pytest.fixture
def edge_host():
    """Two host vertices joined by an edge, t=1"""
    return path_host(2)


@pytest.fixture
def single_host():
    """One host vertex, t=1"""
    return path_host(1)


@pytest.fixture
def path3_graph(single_host):
    """The path (1,1)-(1,2)-(1,3) inside a single host row"""
    vertices = [ProductVertex(1, 1), ProductVertex(1, 2), ProductVertex(1, 3)]
    edges = [(vertices[0], vertices[1]), (vertices[1], vertices[2])]
    return ProductSubgraph.build(single_host, SecondaryFactor.path(3), vertices, edges)


@pytest.fixture
def empty_graph(single_host):
    return ProductSubgraph.build(single_host, SecondaryFactor.path(3), [], [])


@pytest.fixture
def full_path_product(edge_host):
    """Full product of the 1-tree x_1 x_2 with a path on 5 vertices"""
    return full_product(edge_host, SecondaryFactor.path(5))


@pytest.fixture
def random_path_instance():
    """A seeded random subgraph of (random 2-tree) x P_6"""
    host = random_t_tree(2, 8, seed=11)
    return sample_subgraph(host, SecondaryFactor.path(6), 0.8, 0.7, seed=11)


@pytest.fixture
def random_clique_instance():
    host = random_t_tree(1, 6, seed=5)
    return sample_subgraph(host, SecondaryFactor.path_clique(4, 2), 0.9, 0.8, seed=5)


@pytest.fixture
def random_general_instance():
    host = random_t_tree(1, 6, seed=3)
    secondary = SecondaryFactor.general([[2, 3], [1, 3], [1, 2, 4], [3]])
    return sample_subgraph(host, secondary, 0.9, 0.8, seed=3)


@pytest.fixture
def instance_file(tmp_path, random_path_instance):
    """Instance document for random_path_instance on disk"""
    path = tmp_path / "instance.json"
    path.write_text(save_instance(random_path_instance), encoding="utf-8")
    return path


@pytest.fixture
def clean_env(monkeypatch):
    """
    Remove every ODDPROD_* variable so config defaults apply.

    Each variable is set before deletion so monkeypatch also undoes values a
    .env file loads during the test.
    """
    for name in ODDPROD_ENV:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    yield monkeypatch
    monkeypatch.undo()
    reload_config()
