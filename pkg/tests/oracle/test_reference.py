import networkx as nx
import numpy as np
import pytest

import cyclecalc.graphs.core.cycles as cycles_module
from cyclecalc.exceptions import IdentityMismatchError
from cyclecalc.graphs.core import CycleBasis, cycle_set, tree_set
from cyclecalc.graphs.generators import diamond_graph, joined_triangles, path_graph, ring_graph
from cyclecalc.oracle import (
    RandomGraphSpec,
    brute_force_cycle_set,
    brute_force_index,
    dense_laplacian,
    random_graphs,
)
from cyclecalc.spectral import Inertia


def test_dense_laplacian_of_diamond():
    L = dense_laplacian(diamond_graph(1.0, 2.0, 3.0, 4.0, -5.0))
    assert L[0, 1] == 1.0
    assert L[0, 2] == -5.0
    assert L[1, 3] == 0.0
    assert L[0, 0] == -(1.0 + 4.0 - 5.0)
    np.testing.assert_allclose(L.sum(axis=0), 0.0)


@pytest.mark.parametrize("G, expected", [
    (ring_graph(3, (1.0, 1.0, -0.4)), Inertia(0, 1, 2)),
    (ring_graph(3, -1.0), Inertia(2, 1, 0)),
    (diamond_graph(), Inertia(0, 1, 3)),
])
def test_brute_force_index(G, expected):
    assert brute_force_index(G) == expected


def test_brute_force_cycle_set_of_joined_triangles():
    G = joined_triangles(path_length=2)
    assert brute_force_cycle_set(G) == (0, 1, 2, 5, 6, 7)


@pytest.mark.parametrize("seed", range(3))
def test_brute_force_cycle_set_matches_edge_partition(seed):
    spec = RandomGraphSpec(vertices=(3, 9), edges=(2, 12), seed=seed)
    for G in random_graphs(spec, 40):
        assert brute_force_cycle_set(G, max_rank=10) == cycle_set(G)


def test_brute_force_cycle_set_refuses_large_rank():
    G = random_graphs(RandomGraphSpec(vertices=(8, 8), edges=(20, 20), seed=0), 1)[0]
    with pytest.raises(ValueError, match="exceeds max_rank"):
        brute_force_cycle_set(G)


def test_brute_force_cycle_set_of_tree_is_empty():
    assert brute_force_cycle_set(path_graph((1.0, -2.0, 0.5))) == ()


def test_brute_force_cycle_set_does_not_use_the_fundamental_basis(monkeypatch):
    G = joined_triangles(path_length=2)

    def empty_basis(g, t):
        return CycleBasis(Y=np.zeros((g.n_edges, 0), dtype=np.int64), D=g.weights)

    monkeypatch.setattr(cycles_module, "cycle_basis", empty_basis)
    assert tree_set(G) == tuple(range(G.n_edges))
    assert brute_force_cycle_set(G) == (0, 1, 2, 5, 6, 7)


def test_brute_force_cycle_set_reports_bridge_disagreement(monkeypatch):
    monkeypatch.setattr(nx, "bridges", lambda G: iter(()))
    with pytest.raises(IdentityMismatchError, match="bridge"):
        brute_force_cycle_set(joined_triangles(path_length=2))
