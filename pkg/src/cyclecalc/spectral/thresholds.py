# src/cyclecalc/spectral/thresholds.py
r"""
Closed-form stability thresholds for graphs of cycle rank one and two.

Write :math:`\rho = 1/\gamma` for the resistance of an edge. With exactly one
negative edge, the Laplacian is stable (no positive eigenvalue) iff the
cycle form has exactly one positive eigenvalue, which for one or two
independent cycles reduces to a sign condition on :math:`\det Z_G`.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from cyclecalc.metadata import quantity_metadata

__all__ = [
    "threshold_one_cycle",
    "one_cycle_is_stable",
    "threshold_two_cycle",
    "two_cycle_critical_weight",
    "diamond_cycle_weights",
    "diamond_cycle_determinant",
    "diamond_middle_threshold",
    "diamond_outer_threshold",
    "diamond_two_negative_stable",
    "diamond_det_expansion",
    "diamond_tree_expansion",
]


@quantity_metadata(
    display_name="One-cycle critical weight",
    notation=r"\gamma_{\mathrm{crit}} = -\Big(\sum_{i \ne j} 1/\gamma_i\Big)^{-1}",
    category="thresholds",
)
def threshold_one_cycle(weights: Sequence[float], negative_index: int) -> float:
    r"""
    Critical weight for the single negative edge of a ring.

    Definition
    ----------
    A ring with one negative edge :math:`j` is stable iff
    :math:`\sum_i 1/\gamma_i < 0`, i.e. iff
    :math:`\gamma_j > \gamma_{\mathrm{crit}} = -1/\sum_{i \ne j} 1/\gamma_i`.

    Parameters
    ----------
    weights : sequence of float
        Ring weights; the entry at ``negative_index`` is ignored.
    negative_index : int
        Position of the negative edge.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If some other weight is not positive.

    Examples
    --------
    >>> from cyclecalc.spectral import threshold_one_cycle
    >>> threshold_one_cycle([1.0, 1.0, -0.3], 2)
    -0.5
    """
    w = np.asarray(weights, dtype=float)
    others = np.delete(w, negative_index)
    if others.size == 0 or np.any(others <= 0):
        raise ValueError("All weights other than the negative slot must be positive.")
    return float(-1.0 / np.sum(1.0 / others))


def one_cycle_is_stable(weights: Sequence[float]) -> bool:
    """Stability of a ring with exactly one negative weight: ``sum(1/gamma) < 0``."""
    w = np.asarray(weights, dtype=float)
    if np.count_nonzero(w < 0) != 1:
        raise ValueError("Expected exactly one negative weight.")
    return bool(np.sum(1.0 / w) < 0)


@quantity_metadata(
    display_name="Two-cycle resistance bound",
    category="thresholds",
)
def threshold_two_cycle(k1: int, k2: int, k12: int, gamma: float) -> float:
    r"""
    Bound on :math:`1/\gamma_e` for a two-cycle graph with one negative shared edge.

    Definition
    ----------
    Two cycles share a path of :math:`k_{12}` edges and otherwise have
    :math:`k_1` and :math:`k_2` edges of their own; all weights are
    :math:`\gamma > 0` except one shared edge of weight :math:`\gamma_e < 0`.
    The graph is stable iff

    .. math::
        \frac{1}{\gamma_e} < -\frac{1}{\gamma}\left(\frac{k_1 k_2}{k_1 + k_2} + k_{12} - 1\right).

    Returns
    -------
    float
        The right-hand side.

    Examples
    --------
    >>> from cyclecalc.spectral import threshold_two_cycle
    >>> threshold_two_cycle(2, 2, 1, 1.0)
    -1.0
    """
    if min(k1, k2, k12) < 1:
        raise ValueError("Path lengths must be at least 1.")
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}.")
    return -(k1 * k2 / (k1 + k2) + (k12 - 1)) / gamma


def two_cycle_critical_weight(k1: int, k2: int, k12: int, gamma: float) -> float:
    r"""Critical :math:`\gamma_e`: stable iff :math:`\gamma_{\mathrm{crit}} < \gamma_e < 0`."""
    return 1.0 / threshold_two_cycle(k1, k2, k12, gamma)


# ----------------------------------------------------------------------
# Diamond graph (edges a, b, c, d outer; e middle)
# ----------------------------------------------------------------------
def diamond_cycle_weights(a: float, b: float, c: float, d: float, e: float) -> Tuple[float, float, float]:
    r"""Return :math:`(w_1, w_2, w_{12}) = (\rho_a + \rho_b, \rho_c + \rho_d, \rho_e)`."""
    return 1 / a + 1 / b, 1 / c + 1 / d, 1 / e


def diamond_cycle_determinant(a: float, b: float, c: float, d: float, e: float) -> float:
    r""":math:`\det Z_G = w_1 w_2 + w_1 w_{12} + w_2 w_{12}` for the diamond."""
    w1, w2, w12 = diamond_cycle_weights(a, b, c, d, e)
    return w1 * w2 + w1 * w12 + w2 * w12


def diamond_middle_threshold(a: float, b: float, c: float, d: float) -> float:
    r"""
    Bound on :math:`\rho_e` when only the middle edge is negative.

    The diamond is stable iff :math:`\rho_e < -w_1 w_2/(w_1 + w_2)`.

    Examples
    --------
    >>> from cyclecalc.spectral import diamond_middle_threshold
    >>> diamond_middle_threshold(1, 1, 1, 1)
    -1.0
    """
    w1, w2 = 1 / a + 1 / b, 1 / c + 1 / d
    return -w1 * w2 / (w1 + w2)


def diamond_outer_threshold(b: float, c: float, d: float, e: float) -> float:
    r"""
    Bound on :math:`\rho_a` when only the outer edge :math:`a` is negative.

    The diamond is stable iff
    :math:`\rho_a < -(\rho_c + \rho_d)\rho_e/(\rho_c + \rho_d + \rho_e) - \rho_b`.
    """
    w2, w12 = 1 / c + 1 / d, 1 / e
    return -w2 * w12 / (w2 + w12) - 1 / b


def diamond_two_negative_stable(a: float, b: float, c: float, d: float, e: float) -> bool:
    r"""
    Stability of a diamond with exactly two negative edges.

    Stability needs both eigenvalues of the :math:`2 \times 2` cycle form
    positive: :math:`\det Z_G > 0` and :math:`w_1 + w_2 + 2 w_{12} < 0`.
    """
    if sum(1 for x in (a, b, c, d, e) if x < 0) != 2:
        raise ValueError("Expected exactly two negative weights.")
    w1, w2, w12 = diamond_cycle_weights(a, b, c, d, e)
    return bool(w1 * w2 + w1 * w12 + w2 * w12 > 0 and w1 + w2 + 2 * w12 < 0)


_DIAMOND_TREES = (
    # complements of the eight spanning trees, as pairs of edge labels
    ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
    ("a", "e"), ("b", "e"), ("c", "e"), ("d", "e"),
)


def diamond_det_expansion(a: float, b: float, c: float, d: float, e: float) -> float:
    r"""
    Eight-term Laurent expansion of :math:`\det Z_G` for the diamond.

    Each term is :math:`\rho_x\rho_y` for a pair :math:`\{x, y\}` whose
    removal leaves a spanning tree.
    """
    rho = {"a": 1 / a, "b": 1 / b, "c": 1 / c, "d": 1 / d, "e": 1 / e}
    return float(sum(rho[x] * rho[y] for x, y in _DIAMOND_TREES))


def diamond_tree_expansion(a: float, b: float, c: float, d: float, e: float) -> float:
    r"""
    Weighted spanning-tree sum of the diamond: eight products of three weights.

    By the weighted matrix-tree theorem its magnitude equals
    :math:`|\det_{\mathrm{red}}(L_G)|/N`.
    """
    gamma = {"a": a, "b": b, "c": c, "d": d, "e": e}
    total = 0.0
    for pair in _DIAMOND_TREES:
        total += float(np.prod([gamma[k] for k in gamma if k not in pair]))
    return total
