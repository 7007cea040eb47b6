import numpy as np
import pytest

from cyclecalc.exceptions import SpecError
from cyclecalc.graphs.core import cycle_rank
from cyclecalc.oracle.random_graphs import (
    RandomGraphSpec,
    random_connected_graph,
    random_graphs,
    random_nonsingular_matrix,
    random_singular_symmetric,
    random_subspace,
    random_symmetric_matrix,
    random_tree,
)


def test_random_graphs_are_connected_and_in_range():
    spec = RandomGraphSpec(vertices=(3, 9), edges=(2, 15), w_min=0.5, w_max=1.5, seed=5)
    for G in random_graphs(spec, 200):
        assert G.is_connected()
        assert 3 <= G.n_vertices <= 9
        assert max(2, G.n_vertices - 1) <= G.n_edges <= 15
        assert np.all((np.abs(G.weights) >= 0.5) & (np.abs(G.weights) <= 1.5))


def test_random_graphs_are_reproducible():
    spec = RandomGraphSpec(seed=42)
    first = [G.edges for G in random_graphs(spec, 10)]
    second = [G.edges for G in random_graphs(spec, 10)]
    assert first == second


@pytest.mark.parametrize("p, check", [
    (0.0, lambda G: G.negative_edges == ()),
    (1.0, lambda G: G.positive_edges == ()),
])
def test_negative_probability_extremes(p, check):
    for G in random_graphs(RandomGraphSpec(negative_probability=p, seed=1), 20):
        assert check(G)


def test_exact_size_request():
    G = random_connected_graph(RandomGraphSpec(vertices=(6, 6), edges=(9, 9), seed=1))
    assert (G.n_vertices, G.n_edges) == (6, 9)
    assert cycle_rank(G) == 4


def test_random_tree():
    rng = np.random.default_rng(0)
    for n in range(2, 12):
        T = random_tree(n, rng)
        assert T.n_edges == n - 1
        assert T.is_connected()


@pytest.mark.parametrize("kwargs", [
    {"vertices": (0, 3)},
    {"vertices": (5, 3)},
    {"edges": (4, 2)},
    {"w_min": 0.0},
    {"w_min": 2.0, "w_max": 1.0},
    {"negative_probability": 1.5},
])
def test_spec_validation(kwargs):
    with pytest.raises(SpecError):
        RandomGraphSpec(**kwargs)


def test_infeasible_edge_range():
    spec = RandomGraphSpec(vertices=(4, 4), edges=(10, 12))
    with pytest.raises(SpecError, match="No connected simple graph"):
        random_connected_graph(spec)
    assert isinstance(SpecError("x"), ValueError)


def test_random_symmetric_and_nonsingular_matrices():
    rng = np.random.default_rng(3)
    A = random_symmetric_matrix(5, rng)
    assert np.array_equal(A, A.T)
    M = random_nonsingular_matrix(5, rng, max_condition=50.0)
    assert np.linalg.cond(M) < 50.0
    S = random_nonsingular_matrix(4, rng, symmetric=True)
    assert np.array_equal(S, S.T)


def test_random_singular_symmetric_has_given_kernel():
    rng = np.random.default_rng(4)
    for n in range(2, 7):
        H, x = random_singular_symmetric(n, rng)
        np.testing.assert_allclose(H, H.T)
        np.testing.assert_allclose(H @ x, 0.0, atol=1e-10)
        assert np.linalg.matrix_rank(H) == n - 1
    with pytest.raises(SpecError):
        random_singular_symmetric(1, rng)


def test_random_subspace_is_orthonormal():
    rng = np.random.default_rng(5)
    W = random_subspace(7, 3, rng)
    np.testing.assert_allclose(W.T @ W, np.eye(3), atol=1e-12)
    assert random_subspace(4, 0, rng).shape == (4, 0)
