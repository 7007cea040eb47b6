import numpy as np
import pytest

from cyclecalc.graphs.generators import diamond_graph, ring_graph, theta_graph
from cyclecalc.spectral import (
    cycle_form,
    det_red,
    diamond_cycle_determinant,
    diamond_det_expansion,
    diamond_middle_threshold,
    diamond_outer_threshold,
    diamond_tree_expansion,
    diamond_two_negative_stable,
    index_via_cycles,
    laplacian,
    one_cycle_is_stable,
    threshold_one_cycle,
    threshold_two_cycle,
    two_cycle_critical_weight,
)

INSTANCES = 50


def _n_plus(G):
    return index_via_cycles(G).inertia.n_plus


def test_one_cycle_threshold_of_triangle():
    assert threshold_one_cycle([1.0, 1.0, -0.3], 2) == pytest.approx(-0.5)
    assert one_cycle_is_stable([1.0, 1.0, -0.4])
    assert not one_cycle_is_stable([1.0, 1.0, -0.6])


def test_one_cycle_threshold_validation():
    with pytest.raises(ValueError, match="positive"):
        threshold_one_cycle([1.0, -1.0, -0.3], 2)
    with pytest.raises(ValueError, match="exactly one"):
        one_cycle_is_stable([1.0, -1.0, -0.3])


def test_one_cycle_threshold_flips_stability():
    rng = np.random.default_rng(11)
    for _ in range(INSTANCES):
        n = int(rng.integers(3, 12))
        w = rng.uniform(0.2, 3.0, size=n)
        j = int(rng.integers(n))
        crit = threshold_one_cycle(w, j)
        assert crit < 0

        w[j] = 0.99 * crit
        assert _n_plus(ring_graph(n, w)) == 0
        assert one_cycle_is_stable(w)

        w[j] = 1.01 * crit
        assert _n_plus(ring_graph(n, w)) == 1
        assert not one_cycle_is_stable(w)


def test_two_cycle_threshold_of_small_theta():
    assert threshold_two_cycle(2, 2, 1, 1.0) == pytest.approx(-1.0)
    assert two_cycle_critical_weight(2, 2, 1, 1.0) == pytest.approx(-1.0)
    assert _n_plus(theta_graph(2, 2, 1, 1.0, -0.9)) == 0
    assert _n_plus(theta_graph(2, 2, 1, 1.0, -1.1)) == 1


@pytest.mark.parametrize("args", [(0, 2, 1, 1.0), (2, 2, 1, 0.0), (2, 2, 1, -1.0)])
def test_two_cycle_threshold_validation(args):
    with pytest.raises(ValueError):
        threshold_two_cycle(*args)


def test_two_cycle_threshold_flips_stability():
    rng = np.random.default_rng(12)
    done = 0
    while done < INSTANCES:
        k1, k2, k12 = (int(k) for k in rng.integers(1, 6, size=3))
        if sum(k == 1 for k in (k1, k2, k12)) > 1:
            continue
        gamma = float(rng.uniform(0.3, 3.0))
        crit = two_cycle_critical_weight(k1, k2, k12, gamma)
        assert crit < 0
        assert _n_plus(theta_graph(k1, k2, k12, gamma, 0.99 * crit)) == 0
        assert _n_plus(theta_graph(k1, k2, k12, gamma, 1.01 * crit)) == 1
        done += 1


def test_diamond_middle_threshold_flips_stability():
    rng = np.random.default_rng(13)
    for _ in range(INSTANCES):
        a, b, c, d = rng.uniform(0.2, 3.0, size=4)
        rho = diamond_middle_threshold(a, b, c, d)
        assert rho < 0
        # rho_e below the bound is stable, so gamma_e = 1/rho_e just above 1/rho
        assert _n_plus(diamond_graph(a, b, c, d, 0.99 / rho)) == 0
        assert _n_plus(diamond_graph(a, b, c, d, 1.01 / rho)) == 1


def test_diamond_outer_threshold_flips_stability():
    rng = np.random.default_rng(14)
    for _ in range(INSTANCES):
        b, c, d, e = rng.uniform(0.2, 3.0, size=4)
        rho = diamond_outer_threshold(b, c, d, e)
        assert rho < 0
        assert _n_plus(diamond_graph(0.99 / rho, b, c, d, e)) == 0
        assert _n_plus(diamond_graph(1.01 / rho, b, c, d, e)) == 1


def test_diamond_two_negative_stability_matches_index():
    rng = np.random.default_rng(15)
    checked = 0
    for _ in range(4 * INSTANCES):
        w = rng.uniform(0.2, 3.0, size=5)
        neg = rng.choice(5, size=2, replace=False)
        w[neg] *= -1
        det = diamond_cycle_determinant(*w)
        rho = 1 / w
        trace = rho[0] + rho[1] + rho[2] + rho[3] + 2 * rho[4]
        if abs(det) < 1e-6 or abs(trace) < 1e-6:
            continue
        stable = diamond_two_negative_stable(*w)
        assert stable == (_n_plus(diamond_graph(*w)) == 0)
        checked += 1
    assert checked >= INSTANCES


def test_diamond_two_negative_requires_two_negatives():
    with pytest.raises(ValueError, match="two negative"):
        diamond_two_negative_stable(1.0, 1.0, 1.0, 1.0, -1.0)


def test_diamond_expansions():
    rng = np.random.default_rng(16)
    for _ in range(INSTANCES):
        w = rng.uniform(0.2, 3.0, size=5) * rng.choice([-1.0, 1.0], size=5)
        G = diamond_graph(*w)
        det_z = float(np.linalg.det(cycle_form(G).Z))
        assert diamond_det_expansion(*w) == pytest.approx(diamond_cycle_determinant(*w), rel=1e-10)
        assert diamond_cycle_determinant(*w) == pytest.approx(det_z, rel=1e-8, abs=1e-10)

        tree_sum = diamond_tree_expansion(*w)
        assert tree_sum == pytest.approx(np.prod(w) * diamond_det_expansion(*w), rel=1e-10, abs=1e-12)


def test_diamond_tree_expansion_matches_reduced_determinant():
    rng = np.random.default_rng(17)
    for _ in range(INSTANCES):
        w = rng.uniform(0.2, 3.0, size=5)
        G = diamond_graph(*w)
        # all-positive weights: L is negative semidefinite with a simple kernel
        assert abs(det_red(laplacian(G))) / 4 == pytest.approx(diamond_tree_expansion(*w), rel=1e-8)
