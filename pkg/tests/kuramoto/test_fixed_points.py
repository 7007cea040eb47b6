import numpy as np
import pytest

from cyclecalc.exceptions import DegenerateWeightError, NotAFixedPointError
from cyclecalc.graphs.generators import path_graph, ring_graph
from cyclecalc.kuramoto import (
    PhaseConfiguration,
    classify_fixed_point,
    fixed_point_residual,
    jacobian_graph,
    twisted_state,
)
from cyclecalc.oracle import RandomGraphSpec, brute_force_index, random_graphs


def _splay(n):
    return PhaseConfiguration(2 * np.pi * np.arange(n) / n, np.zeros(n), ring_graph(n))


@pytest.mark.parametrize("theta, omega, weights, match", [
    (np.zeros(2), np.zeros(3), 1.0, "length 3"),
    (np.zeros(3), np.zeros(2), 1.0, "length 3"),
    (np.zeros(3), np.zeros(3), (1.0, -1.0, 1.0), "strictly positive"),
])
def test_phase_configuration_validation(theta, omega, weights, match):
    with pytest.raises(ValueError, match=match):
        PhaseConfiguration(theta, omega, ring_graph(3, weights))


def test_phase_configuration_converts_to_arrays():
    pc = PhaseConfiguration([0, 1, 2], [0, 0, 0], ring_graph(3))
    assert pc.theta.dtype == float
    assert pc.n == 3


def test_residual_sums_to_total_frequency():
    rng = np.random.default_rng(0)
    G = ring_graph(6, rng.uniform(0.5, 2.0, size=6))
    pc = PhaseConfiguration(rng.uniform(0, 2 * np.pi, 6), rng.normal(size=6), G)
    r = fixed_point_residual(pc)
    assert r.sum() == pytest.approx(pc.omega.sum())


def test_residual_of_two_oscillators():
    pc = PhaseConfiguration([0.0, 0.3], [0.0, 0.0], path_graph((2.0,)))
    np.testing.assert_allclose(fixed_point_residual(pc), [2 * np.sin(0.3), -2 * np.sin(0.3)])


def test_jacobian_weights_are_coupling_times_cosine():
    G = ring_graph(4, (1.0, 2.0, 3.0, 4.0))
    theta = np.array([0.0, 0.2, 0.5, 1.1])
    pc = PhaseConfiguration(theta, np.zeros(4), G)
    J = jacobian_graph(pc)
    expected = [np.cos(0.2), 2 * np.cos(0.3), 3 * np.cos(0.6), 4 * np.cos(1.1)]
    np.testing.assert_allclose(J.weights, expected)
    assert [e[:2] for e in J.edges] == [e[:2] for e in G.edges]


def test_jacobian_rejects_quarter_turn_link():
    pc = PhaseConfiguration([0.0, np.pi / 2], [-1.0, 1.0], path_graph((1.0,)))
    with pytest.raises(DegenerateWeightError, match="pi/2"):
        jacobian_graph(pc)
    with pytest.raises(DegenerateWeightError):
        classify_fixed_point(pc)


@pytest.mark.parametrize("n, unstable", [(3, 2), (5, 0), (6, 0), (8, 0)])
def test_splay_states(n, unstable):
    result = classify_fixed_point(_splay(n))
    assert result.unstable_dim == unstable
    assert result.zero_modes == 1


def test_square_splay_state_is_degenerate():
    with pytest.raises(DegenerateWeightError):
        classify_fixed_point(_splay(4))


def test_splay_triangle_details():
    result = classify_fixed_point(_splay(3))
    assert result.long_links == 3
    assert not result.is_stable
    np.testing.assert_allclose(result.weights, [-0.5, -0.5, -0.5])
    d = result.to_dict()
    assert set(d) == {"unstable_dim", "zero_modes", "long_links", "residual", "weights"}


def test_synchronized_state_is_stable():
    result = classify_fixed_point(PhaseConfiguration(np.zeros(5), np.zeros(5), ring_graph(5)))
    assert result.is_stable
    assert result.long_links == 0
    assert result.residual == 0.0


def test_non_fixed_point_is_rejected():
    pc = PhaseConfiguration([0.0, 0.3, 0.1], np.zeros(3), ring_graph(3))
    with pytest.raises(NotAFixedPointError, match="exceeds tolerance"):
        classify_fixed_point(pc)
    assert classify_fixed_point(pc, residual_tol=1.0).residual > 0


def test_residual_tolerance_from_environment(monkeypatch):
    pc = PhaseConfiguration([0.0, 1e-7], np.zeros(2), path_graph((1.0,)))
    with pytest.raises(NotAFixedPointError):
        classify_fixed_point(pc)
    monkeypatch.setenv("CYCLECALC_RESIDUAL_TOL", "1e-6")
    assert classify_fixed_point(pc).is_stable


@pytest.mark.parametrize("zeta", [0.05, 0.15, 0.3])
def test_twisted_state_is_a_fixed_point(zeta):
    pc = twisted_state(9, zeta, coupling=2.0)
    np.testing.assert_allclose(fixed_point_residual(pc), 0.0, atol=1e-12)


@pytest.mark.parametrize("seed", range(3))
def test_classification_matches_jacobian_index(seed):
    spec = RandomGraphSpec(vertices=(3, 9), negative_probability=0.0, seed=seed)
    rng = np.random.default_rng(100 + seed)
    checked = 0
    for G in random_graphs(spec, 60):
        theta = rng.uniform(0, 2 * np.pi, G.n_vertices)
        # choose natural frequencies that make theta a fixed point
        omega = -fixed_point_residual(PhaseConfiguration(theta, np.zeros(G.n_vertices), G))
        pc = PhaseConfiguration(theta, omega, G)
        gaps = np.array([theta[e.head] - theta[e.tail] for e in G.edges])
        if np.any(np.abs(np.cos(gaps)) < 1e-6):
            continue
        reference = brute_force_index(jacobian_graph(pc))
        if reference.n_zero > 1:
            continue
        result = classify_fixed_point(pc)
        assert result.unstable_dim == reference.n_plus
        assert result.zero_modes == 1
        assert classify_fixed_point(pc, method="lapack").unstable_dim == reference.n_plus
        checked += 1
    assert checked > 40
