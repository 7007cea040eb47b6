# src/cyclecalc/spectral/lemmas.py
r"""
Classical inertia and determinant identities, as callable two-sided checks.

Restrictions to a subspace :math:`S` use an orthonormal basis :math:`W` of
:math:`S`: :math:`M|_S = W^\top M W`.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg as sla

from cyclecalc.oracle.eigen import Inertia
from cyclecalc.spectral.laplacian import det_red, inertia

__all__ = [
    "InertiaCheck",
    "ValueCheck",
    "orthonormal_basis",
    "orthogonal_complement",
    "restrict",
    "haynsworth_inertia",
    "haynsworth_determinant",
    "sylvester_inertia",
    "rank_one_update_determinant",
]


class InertiaCheck(NamedTuple):
    lhs: Inertia
    rhs: Inertia

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


class ValueCheck(NamedTuple):
    lhs: float
    rhs: float

    def holds(self, rtol: float = 1e-8) -> bool:
        return bool(np.isclose(self.lhs, self.rhs, rtol=rtol, atol=0.0))


def orthonormal_basis(S) -> np.ndarray:
    """Orthonormal basis of the column span of ``S``."""
    S = np.asarray(S, dtype=float)
    if S.shape[1] == 0:
        return np.zeros((S.shape[0], 0))
    return sla.orth(S)


def orthogonal_complement(S) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of the column span of ``S``."""
    W = orthonormal_basis(S)
    if W.shape[1] == 0:
        return np.eye(W.shape[0])
    return sla.null_space(W.T)


def restrict(M, S) -> np.ndarray:
    r"""Restriction :math:`W^\top M W` of ``M`` to the column span of ``S``."""
    W = orthonormal_basis(S)
    return W.T @ np.asarray(M, dtype=float) @ W


def _add(a: Inertia, b: Inertia) -> Inertia:
    return Inertia(a.n_plus + b.n_plus, a.n_zero + b.n_zero, a.n_minus + b.n_minus)


def haynsworth_inertia(M, S, tol: Optional[float] = None) -> InertiaCheck:
    r"""
    Inertia additivity across a subspace and its complement.

    For nonsingular symmetric :math:`M` and a subspace :math:`S` with
    :math:`M|_S` nonsingular,
    :math:`\operatorname{In}(M) = \operatorname{In}(M|_S) + \operatorname{In}(M^{-1}|_{S^\perp})`.

    Returns
    -------
    InertiaCheck
        ``lhs`` is the inertia of ``M``; ``rhs`` the sum on the right.
    """
    M = np.asarray(M, dtype=float)
    Minv = np.linalg.inv(M)
    rhs = _add(inertia(restrict(M, S), tol), inertia(restrict(Minv, orthogonal_complement(S)), tol))
    return InertiaCheck(inertia(M, tol), rhs)


def haynsworth_determinant(M, S) -> ValueCheck:
    r"""
    Determinantal form: :math:`\det M = \det(M|_S)/\det(M^{-1}|_{S^\perp})`.
    """
    M = np.asarray(M, dtype=float)
    Minv = np.linalg.inv(M)
    num = np.linalg.det(restrict(M, S)) if np.asarray(S).shape[1] else 1.0
    comp = orthogonal_complement(S)
    den = np.linalg.det(restrict(Minv, comp)) if comp.shape[1] else 1.0
    return ValueCheck(float(np.linalg.det(M)), float(num / den))


def sylvester_inertia(M, U, tol: Optional[float] = None) -> InertiaCheck:
    r"""
    Congruence invariance: :math:`\operatorname{In}(M) = \operatorname{In}(U^\top M U)` for nonsingular :math:`U`.
    """
    M = np.asarray(M, dtype=float)
    U = np.asarray(U, dtype=float)
    C = U.T @ M @ U
    return InertiaCheck(inertia(M, tol), inertia(0.5 * (C + C.T), tol))


def rank_one_update_determinant(H, x, y, z) -> ValueCheck:
    r"""
    Determinant of a rank-one update of a matrix with a one-dimensional kernel.

    For symmetric :math:`H` with :math:`\ker H = \operatorname{span}\{x\}`,

    .. math::
        \det(H + y z^\top) = \frac{\langle x, y\rangle\langle x, z\rangle}{\langle x, x\rangle}
        \det{}_{\mathrm{red}}(H),

    where :math:`\det_{\mathrm{red}}` is the determinant on :math:`x^\perp`.

    Returns
    -------
    ValueCheck
        ``lhs`` is the left side, ``rhs`` the right side.
    """
    H = np.asarray(H, dtype=float)
    x, y, z = (np.asarray(v, dtype=float) for v in (x, y, z))
    lhs = float(np.linalg.det(H + np.outer(y, z)))
    rhs = float(np.dot(x, y) * np.dot(x, z) / np.dot(x, x) * det_red(H, kernel=x, strict=True))
    return ValueCheck(lhs, rhs)
