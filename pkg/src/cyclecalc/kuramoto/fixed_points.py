# src/cyclecalc/kuramoto/fixed_points.py
r"""
Fixed points of the Kuramoto model on a weighted coupling graph.

.. math::
    \frac{d\theta_i}{dt} = \omega_i + \sum_j \delta_{ij}\sin(\theta_j - \theta_i).

The Jacobian at a phase configuration is the Laplacian of the coupling graph
reweighted by :math:`\delta_{ij}\cos(\theta_j - \theta_i)`, so the dimension
of the unstable manifold of a fixed point is the number of positive
eigenvalues of that Laplacian.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from cyclecalc.config import resolve_tol
from cyclecalc.exceptions import DegenerateWeightError, NotAFixedPointError
from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.spectral.cycle_form import index_via_cycles

__all__ = [
    "PhaseConfiguration",
    "FixedPointClassification",
    "fixed_point_residual",
    "jacobian_graph",
    "classify_fixed_point",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhaseConfiguration:
    r"""
    Phases, natural frequencies and coupling of a Kuramoto network.

    Parameters
    ----------
    theta : array_like
        Phase :math:`\theta_i` of each oscillator, in radians (modulo :math:`2\pi`).
    omega : array_like
        Natural frequency :math:`\omega_i` of each oscillator.
    coupling : WeightedGraph
        Coupling graph with strictly positive weights :math:`\delta_{ij}`.

    Raises
    ------
    ValueError
        On length mismatches or a nonpositive coupling weight.
    """
    theta: np.ndarray
    omega: np.ndarray
    coupling: WeightedGraph

    def __post_init__(self) -> None:
        theta = np.asarray(self.theta, dtype=float)
        omega = np.asarray(self.omega, dtype=float)
        n = self.coupling.n_vertices
        if theta.shape != (n,) or omega.shape != (n,):
            raise ValueError(
                f"theta and omega must have length {n}, got {theta.shape} and {omega.shape}."
            )
        if np.any(self.coupling.weights <= 0):
            raise ValueError("Coupling weights must be strictly positive.")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "omega", omega)

    @property
    def n(self) -> int:
        return self.coupling.n_vertices


@dataclass(frozen=True)
class FixedPointClassification:
    """
    Stability data of a fixed point.

    ``unstable_dim`` is the dimension of the unstable manifold, ``zero_modes``
    the number of zero Jacobian eigenvalues (one for the rotational
    symmetry), ``long_links`` the number of links with negative Jacobian
    weight, i.e. phase gap beyond :math:`\\pi/2`.
    """
    unstable_dim: int
    zero_modes: int
    weights: Tuple[float, ...]
    long_links: int
    residual: float

    @property
    def is_stable(self) -> bool:
        return self.unstable_dim == 0

    def to_dict(self) -> dict:
        return {
            "unstable_dim": self.unstable_dim,
            "zero_modes": self.zero_modes,
            "long_links": self.long_links,
            "residual": self.residual,
            "weights": list(self.weights),
        }


def _edge_arrays(g: WeightedGraph) -> Tuple[np.ndarray, np.ndarray]:
    tails = np.fromiter((e.tail for e in g.edges), dtype=np.int64, count=g.n_edges)
    heads = np.fromiter((e.head for e in g.edges), dtype=np.int64, count=g.n_edges)
    return tails, heads


def fixed_point_residual(pc: PhaseConfiguration) -> np.ndarray:
    r"""
    Right-hand side of the Kuramoto equations at ``pc``.

    Returns
    -------
    numpy.ndarray
        :math:`r_i = \omega_i + \sum_j \delta_{ij}\sin(\theta_j - \theta_i)`.
        The coupling terms cancel in pairs, so :math:`\sum_i r_i = \sum_i \omega_i`.

    Examples
    --------
    >>> import numpy as np
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.kuramoto import PhaseConfiguration, fixed_point_residual
    >>> pc = PhaseConfiguration(np.zeros(4), np.zeros(4), ring_graph(4))
    >>> fixed_point_residual(pc)
    array([0., 0., 0., 0.])
    """
    tails, heads = _edge_arrays(pc.coupling)
    flow = pc.coupling.weights * np.sin(pc.theta[heads] - pc.theta[tails])
    r = pc.omega.copy()
    np.add.at(r, tails, flow)
    np.add.at(r, heads, -flow)
    return r


def jacobian_graph(pc: PhaseConfiguration, weight_eps: Optional[float] = None) -> WeightedGraph:
    r"""
    Coupling graph reweighted by :math:`\gamma_{ij} = \delta_{ij}\cos(\theta_j - \theta_i)`.

    Its Laplacian is the Jacobian of the Kuramoto vector field at ``pc``.

    Raises
    ------
    DegenerateWeightError
        If some link sits at a phase gap of :math:`\pm\pi/2`, so that
        :math:`|\gamma_{ij}| <` ``weight_eps``.
    """
    eps = resolve_tol(weight_eps, "weight_eps")
    tails, heads = _edge_arrays(pc.coupling)
    gamma = pc.coupling.weights * np.cos(pc.theta[heads] - pc.theta[tails])
    flat = np.flatnonzero(np.abs(gamma) < eps)
    if flat.size:
        e = pc.coupling.edges[int(flat[0])]
        raise DegenerateWeightError(
            f"Link ({e.tail}, {e.head}) has phase gap at +-pi/2; Jacobian weight {gamma[flat[0]]:.3e}."
        )
    return pc.coupling.with_weights(gamma, weight_eps=eps)


def classify_fixed_point(
    pc: PhaseConfiguration,
    residual_tol: Optional[float] = None,
    *,
    tol: Optional[float] = None,
    method: Optional[str] = None,
) -> FixedPointClassification:
    r"""
    Classify a fixed point by the inertia of its Jacobian.

    Parameters
    ----------
    pc : PhaseConfiguration
        A fixed point on a connected coupling graph.
    residual_tol : float, optional
        Largest accepted :math:`\|r\|_\infty` (default ``1e-8``).
    tol : float, optional
        Relative zero threshold for the inertia computation.
    method : {"jacobi", "lapack"}, optional
        Eigensolver backend.

    Returns
    -------
    FixedPointClassification

    Raises
    ------
    NotAFixedPointError
        If the residual exceeds ``residual_tol``.
    DegenerateWeightError
        If a link has phase gap :math:`\pm\pi/2`.

    Examples
    --------
    >>> import numpy as np
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.kuramoto import PhaseConfiguration, classify_fixed_point
    >>> theta = 2 * np.pi * np.arange(3) / 3
    >>> classify_fixed_point(PhaseConfiguration(theta, np.zeros(3), ring_graph(3))).unstable_dim
    2
    """
    rtol = resolve_tol(residual_tol, "residual_tol")
    r = fixed_point_residual(pc)
    size = float(np.max(np.abs(r))) if r.size else 0.0
    if size > rtol:
        raise NotAFixedPointError(f"Residual {size:.3e} exceeds tolerance {rtol:.3e}.")

    jac = jacobian_graph(pc)
    result = index_via_cycles(jac, tol, method=method)
    logger.debug("Fixed point with %d long links has inertia %s.", len(jac.negative_edges), result.inertia)
    return FixedPointClassification(
        unstable_dim=result.inertia.n_plus,
        zero_modes=result.inertia.n_zero,
        weights=tuple(float(w) for w in jac.weights),
        long_links=len(jac.negative_edges),
        residual=size,
    )
