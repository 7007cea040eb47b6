import numpy as np
import pytest

from cyclecalc.exceptions import NotConnectedError
from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.graphs.core.cycles import (
    connected_components,
    cycle_basis,
    cycle_rank,
    cycle_set,
    edge_partition,
    fundamental_cycle,
    incidence,
    sign_subgraph,
    spanning_forest,
    spanning_tree,
    tree_set,
)
from cyclecalc.graphs.generators import (
    diamond_graph,
    joined_triangles,
    path_graph,
    ring_graph,
    star_graph,
    triangle_graph,
)
from cyclecalc.oracle.random_graphs import RandomGraphSpec, random_graphs

TWO_TRIANGLES = WeightedGraph(
    6,
    [(0, 1, 1.0), (1, 2, 1.0), (0, 2, -1.0), (3, 4, 1.0), (4, 5, -1.0), (3, 5, 1.0)],
)


def test_incidence_columns():
    B = incidence(path_graph((1.0, -2.0))).B
    assert B.tolist() == [[1, 0], [-1, 1], [0, -1]]
    assert B.dtype.kind == "i"


@pytest.mark.parametrize("G", [
    triangle_graph(),
    diamond_graph(),
    ring_graph(7, -0.5),
    TWO_TRIANGLES,
])
def test_incidence_columns_sum_to_zero(G):
    assert np.all(incidence(G).B.sum(axis=0) == 0)


@pytest.mark.parametrize("G, expected", [
    (triangle_graph(), 1),
    (diamond_graph(), 2),
    (ring_graph(6), 1),
    (star_graph((1.0, 2.0, 3.0)), 0),
    (TWO_TRIANGLES, 2),
    (joined_triangles(path_length=3), 2),
])
def test_cycle_rank(G, expected):
    assert cycle_rank(G) == expected
    assert incidence(G).nullity == expected


def test_connected_components_with_sign_filter():
    G = triangle_graph((1.0, 1.0, -1.0))
    assert connected_components(G).count == 1
    neg = connected_components(G, "negative")
    assert neg.count == 2
    assert neg.labels == (0, 1, 0)
    assert connected_components(G, "positive").count == 1


def test_sign_subgraph_index_map():
    G = diamond_graph(1.0, -1.0, 1.0, -1.0, 2.0)
    sub, kept = sign_subgraph(G, "negative")
    assert kept == (1, 3)
    assert sub.n_vertices == 4
    assert [e[:2] for e in sub.edges] == [(1, 2), (0, 3)]
    with pytest.raises(ValueError, match="sign must be"):
        sign_subgraph(G, "zero")


def test_spanning_tree_of_diamond():
    t = spanning_tree(diamond_graph())
    assert t.tree_edges == (0, 3, 4)
    assert t.non_tree_edges == (1, 2)
    assert t.parent == (-1, 0, 0, 0)
    assert t.depth == (0, 1, 1, 1)
    assert t.roots == (0,)
    assert t.path_to_root(2) == [2, 0]


def test_spanning_forest_of_disconnected_graph():
    G = WeightedGraph(5, [(0, 1, 1.0), (2, 3, 1.0), (3, 4, -1.0)])
    f = spanning_forest(G)
    assert f.roots == (0, 2)
    assert not f.is_spanning_tree
    assert f.non_tree_edges == ()
    with pytest.raises(NotConnectedError):
        spanning_tree(G)


def test_spanning_tree_of_empty_graph():
    with pytest.raises(NotConnectedError):
        spanning_tree(WeightedGraph(0, []))


def test_fundamental_cycles_of_diamond():
    G = diamond_graph()
    t = spanning_tree(G)
    assert fundamental_cycle(G, t, 1).tolist() == [1, 1, 0, 0, -1]
    assert fundamental_cycle(G, t, 2).tolist() == [0, 0, 1, -1, 1]


def test_ring_cycle_is_all_ones_up_to_orientation():
    G = ring_graph(5)
    Y = cycle_basis(G, spanning_tree(G)).Y
    assert Y.shape == (5, 1)
    assert np.all(np.abs(Y) == 1)


def test_tree_has_empty_basis():
    G = path_graph((1.0, -1.0, 2.0))
    basis = cycle_basis(G, spanning_tree(G))
    assert basis.Y.shape == (3, 0)
    assert basis.size == 0


def test_cycle_basis_rejects_foreign_tree():
    with pytest.raises(ValueError, match="does not belong"):
        cycle_basis(ring_graph(4), spanning_tree(triangle_graph()))


@pytest.mark.parametrize("seed", range(5))
def test_cycle_basis_spans_kernel_of_incidence(seed):
    for G in random_graphs(RandomGraphSpec(seed=seed), 40):
        basis = cycle_basis(G, spanning_tree(G))
        B = incidence(G).B
        assert np.all(B @ basis.Y == 0)
        assert basis.size == cycle_rank(G)
        if basis.size:
            assert np.linalg.matrix_rank(basis.Y) == basis.size
            assert set(np.unique(basis.Y)) <= {-1, 0, 1}
        assert np.array_equal(basis.D, G.weights)


def test_edge_partition_of_joined_triangles():
    G = joined_triangles(path_length=2)
    part = edge_partition(G)
    assert part.tree_set == (3, 4)
    assert part.cycle_set == (0, 1, 2, 5, 6, 7)
    assert cycle_set(G) == part.cycle_set
    assert tree_set(G) == part.tree_set


@pytest.mark.parametrize("G, expected_tree_set", [
    (path_graph((1.0, 2.0)), (0, 1)),
    (ring_graph(4), ()),
    (TWO_TRIANGLES, ()),
])
def test_tree_set(G, expected_tree_set):
    assert tree_set(G) == expected_tree_set
