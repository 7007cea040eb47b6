# src/cyclecalc/oracle/eigen.py
r"""
Dense symmetric eigensolver by cyclic Jacobi rotations, and inertia counts.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from cyclecalc.config import EIGENSOLVERS, get_settings, resolve_tol
from cyclecalc.exceptions import ConvergenceError
from cyclecalc.utils import ensure_symmetric

__all__ = [
    "EigenDecomposition",
    "Inertia",
    "sym_eigen",
    "symmetric_eigenvalues",
    "count_inertia",
    "zero_threshold",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenDecomposition:
    r"""
    Eigenvalues in ascending order with matching orthonormal eigenvectors.

    Parameters
    ----------
    eigenvalues : numpy.ndarray
        Sorted eigenvalues :math:`\lambda_1 \le \dots \le \lambda_n`.
    eigenvectors : numpy.ndarray
        Orthonormal matrix whose column :math:`i` belongs to :math:`\lambda_i`.
    sweeps : int
        Number of Jacobi sweeps performed.
    """
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0


@dataclass(frozen=True)
class Inertia:
    r"""
    Inertia triple :math:`(n_+, n_0, n_-)` of a symmetric matrix.

    Parameters
    ----------
    n_plus : int
        Number of positive eigenvalues.
    n_zero : int
        Number of zero eigenvalues.
    n_minus : int
        Number of negative eigenvalues.
    """
    n_plus: int
    n_zero: int
    n_minus: int

    def __post_init__(self) -> None:
        if min(self.n_plus, self.n_zero, self.n_minus) < 0:
            raise ValueError(f"Inertia counts must be nonnegative, got {self.as_tuple()}.")

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)

    def to_dict(self) -> dict:
        return {"n_plus": self.n_plus, "n_zero": self.n_zero, "n_minus": self.n_minus}

    def __str__(self) -> str:
        return f"(n+={self.n_plus}, n0={self.n_zero}, n-={self.n_minus})"


def _off_diagonal_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def sym_eigen(
    M,
    *,
    tol: float = 1e-12,
    max_sweeps: int = 100,
    symmetry_tol: Optional[float] = None,
) -> EigenDecomposition:
    r"""
    Full eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every pair :math:`p < q` and annihilates
    :math:`a_{pq}` with the rotation

    .. math::
        \theta = \frac{a_{qq} - a_{pp}}{2 a_{pq}}, \quad
        t = \frac{\operatorname{sgn}\theta}{|\theta| + \sqrt{\theta^2 + 1}}, \quad
        c = \frac{1}{\sqrt{t^2 + 1}}, \quad s = t c.

    Sweeps stop once the off-diagonal Frobenius norm is at most
    :math:`\mathrm{tol}\cdot\|M\|_F`.

    Parameters
    ----------
    M : array_like
        Square symmetric matrix.
    tol : float
        Relative stopping threshold on the off-diagonal norm.
    max_sweeps : int
        Sweep budget.
    symmetry_tol : float, optional
        Asymmetry tolerance passed to :func:`cyclecalc.utils.ensure_symmetric`.

    Returns
    -------
    EigenDecomposition

    Raises
    ------
    NotSymmetricError
        If ``M`` is not symmetric within tolerance.
    ConvergenceError
        If the sweep budget is exhausted.

    Examples
    --------
    >>> from cyclecalc.oracle import sym_eigen
    >>> sym_eigen([[0.0, 1.0], [1.0, 0.0]]).eigenvalues
    array([-1.,  1.])
    """
    A = ensure_symmetric(M, symmetry_tol).copy()
    n = A.shape[0]
    V = np.eye(n)
    if n == 0:
        return EigenDecomposition(np.zeros(0), V, 0)

    target = tol * float(np.linalg.norm(A))
    sweeps = 0
    while _off_diagonal_norm(A) > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_diagonal_norm(A):.3e})."
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app, aqq = A[p, p], A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                Ap = A[:, p].copy()
                Aq = A[:, q].copy()
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq
                A[p, :] = A[:, p]
                A[q, :] = A[:, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0

                Vp = V[:, p].copy()
                Vq = V[:, q].copy()
                V[:, p] = c * Vp - s * Vq
                V[:, q] = s * Vp + c * Vq

    logger.debug("Jacobi converged in %d sweeps for a %dx%d matrix.", sweeps, n, n)
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], V[:, order], sweeps)


def symmetric_eigenvalues(M, *, method: Optional[str] = None) -> np.ndarray:
    r"""
    Ascending eigenvalues of a symmetric matrix.

    Parameters
    ----------
    M : array_like
        Square symmetric matrix.
    method : {"jacobi", "lapack"}, optional
        Backend; defaults to the ``eigensolver`` setting.

    Returns
    -------
    numpy.ndarray
    """
    method = method or get_settings().eigensolver
    if method not in EIGENSOLVERS:
        raise ValueError(f"method must be one of {EIGENSOLVERS}, got {method!r}.")
    A = ensure_symmetric(M)
    if method == "lapack":
        return np.linalg.eigvalsh(A) if A.size else np.zeros(0)
    return sym_eigen(A).eigenvalues


def zero_threshold(eigenvalues, tol: Optional[float] = None) -> float:
    r"""Zero threshold :math:`\tau = \mathrm{tol}\cdot\max(1, \max_i |\lambda_i|)`."""
    tol = resolve_tol(tol, "inertia_tol")
    lam = np.asarray(eigenvalues, dtype=float)
    scale = max(1.0, float(np.max(np.abs(lam)))) if lam.size else 1.0
    return tol * scale


def count_inertia(eigenvalues, tol: Optional[float] = None) -> Inertia:
    r"""
    Count eigenvalues above, within, and below :math:`\pm\tau`.

    Parameters
    ----------
    eigenvalues : array_like
        Real eigenvalues.
    tol : float, optional
        Relative zero threshold (default ``1e-9``); see :func:`zero_threshold`.

    Returns
    -------
    Inertia

    Examples
    --------
    >>> from cyclecalc.oracle import count_inertia
    >>> count_inertia([-3.0, -3.0, 1e-14])
    Inertia(n_plus=0, n_zero=1, n_minus=2)
    """
    lam = np.asarray(eigenvalues, dtype=float)
    tau = zero_threshold(lam, tol)
    n_plus = int(np.count_nonzero(lam > tau))
    n_minus = int(np.count_nonzero(lam < -tau))
    return Inertia(n_plus, int(lam.size) - n_plus - n_minus, n_minus)
