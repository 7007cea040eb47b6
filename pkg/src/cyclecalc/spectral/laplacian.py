# src/cyclecalc/spectral/laplacian.py
r"""
Weighted Laplacians, inertia, and reduced determinants.

The Laplacian uses the sign convention in which off-diagonal entries are the
edge weights and diagonal entries are minus the weighted degrees. With all
weights positive it is negative semidefinite, and a configuration is stable
when the Laplacian has no positive eigenvalue.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
import scipy.linalg as sla

from cyclecalc.config import resolve_tol
from cyclecalc.exceptions import DegenerateKernelError
from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.graphs.core.cycles import incidence
from cyclecalc.metadata import quantity_metadata
from cyclecalc.oracle.eigen import Inertia, count_inertia, symmetric_eigenvalues
from cyclecalc.utils import ensure_symmetric, require_weighted_graph

__all__ = [
    "LaplacianMatrix",
    "Inertia",
    "laplacian",
    "inertia",
    "direct_index",
    "det_red",
]

logger = logging.getLogger(__name__)

MatrixLike = Union["LaplacianMatrix", np.ndarray]


@dataclass(frozen=True)
class LaplacianMatrix:
    r"""
    Laplacian :math:`L_G = -B D B^\top` of a weighted graph.

    Parameters
    ----------
    L : numpy.ndarray
        Symmetric ``N x N`` matrix with :math:`L\mathbf{1} = 0`.
    """
    L: np.ndarray

    @property
    def size(self) -> int:
        return int(self.L.shape[0])


def _as_array(M: MatrixLike) -> np.ndarray:
    return M.L if isinstance(M, LaplacianMatrix) else np.asarray(M, dtype=float)


@require_weighted_graph
@quantity_metadata(
    display_name="Laplacian matrix",
    notation=r"L_G",
    category="spectral",
    aliases=("weighted Laplacian",),
)
def laplacian(g: WeightedGraph) -> LaplacianMatrix:
    r"""
    Compute the weighted Laplacian of a graph.

    Definition
    ----------
    :math:`(L_G)_{vw} = \gamma_{vw}` for adjacent :math:`v \ne w`, zero for
    non-adjacent pairs, and :math:`(L_G)_{vv} = -\sum_{w \sim v}\gamma_{vw}`.
    Equivalently :math:`L_G = -B D B^\top` with :math:`B` the signed
    incidence matrix and :math:`D = \operatorname{diag}(\gamma_e)`.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.

    Returns
    -------
    LaplacianMatrix

    Examples
    --------
    >>> from cyclecalc.graphs.core import WeightedGraph
    >>> from cyclecalc.spectral import laplacian
    >>> laplacian(WeightedGraph(2, [(0, 1, 2.0)])).L
    array([[-2.,  2.],
           [ 2., -2.]])
    """
    B = incidence(g).B.astype(float)
    L = -(B * g.weights) @ B.T
    return LaplacianMatrix(0.5 * (L + L.T))


@quantity_metadata(
    display_name="Inertia",
    notation=r"(n_+, n_0, n_-)",
    category="spectral",
    aliases=("spectral index", "inertia triple"),
)
def inertia(
    M: MatrixLike,
    tol: Optional[float] = None,
    *,
    method: Optional[str] = None,
) -> Inertia:
    r"""
    Count the positive, zero and negative eigenvalues of a symmetric matrix.

    Definition
    ----------
    The triple :math:`(n_+, n_0, n_-)` of eigenvalues greater than
    :math:`\tau`, within :math:`[-\tau, \tau]`, and less than :math:`-\tau`,
    where :math:`\tau = \mathrm{tol}\cdot\max(1, \rho)` and :math:`\rho` is
    the spectral radius.

    Parameters
    ----------
    M : LaplacianMatrix or array_like
        Symmetric matrix.
    tol : float, optional
        Relative zero threshold (default ``1e-9``).
    method : {"jacobi", "lapack"}, optional
        Eigensolver backend (default from ``CYCLECALC_EIGENSOLVER``).

    Returns
    -------
    Inertia

    Raises
    ------
    NotSymmetricError
        If ``M`` is not symmetric to within ``1e-10`` relative.

    Examples
    --------
    >>> import numpy as np
    >>> from cyclecalc.spectral import inertia
    >>> inertia(np.zeros((3, 3)))
    Inertia(n_plus=0, n_zero=3, n_minus=0)
    """
    A = ensure_symmetric(_as_array(M))
    return count_inertia(symmetric_eigenvalues(A, method=method), tol)


@require_weighted_graph
def direct_index(g: WeightedGraph, tol: Optional[float] = None, *, method: Optional[str] = None) -> Inertia:
    """Inertia of :math:`L_G` by eigensolve of the Laplacian itself."""
    return inertia(laplacian(g), tol, method=method)


@quantity_metadata(
    display_name="Reduced determinant",
    notation=r"\det_{\mathrm{red}}(L_G)",
    category="spectral",
)
def det_red(
    L: MatrixLike,
    *,
    kernel: Optional[np.ndarray] = None,
    tol: Optional[float] = None,
    strict: bool = False,
) -> float:
    r"""
    Determinant of a symmetric matrix restricted to the complement of its kernel vector.

    Definition
    ----------
    For a Laplacian :math:`L` with :math:`L\mathbf{1} = 0`,
    :math:`\det_{\mathrm{red}}(L) = \det(P^\top L P)` for any orthonormal
    basis :math:`P` of :math:`\mathbf{1}^\perp`; equivalently the product
    of the eigenvalues other than the zero eigenvalue at :math:`\mathbf{1}`.
    It vanishes iff :math:`0` is a repeated eigenvalue.

    Parameters
    ----------
    L : LaplacianMatrix or array_like
        Symmetric matrix annihilating ``kernel``.
    kernel : numpy.ndarray, optional
        The known kernel vector; defaults to the all-ones vector.
    tol : float, optional
        Relative zero threshold for the kernel-dimension check.
    strict : bool
        Raise instead of returning ``0.0`` when the kernel is not simple.

    Returns
    -------
    float
        The reduced determinant. For a ``1 x 1`` matrix the restriction is
        empty and the value is ``1.0``.

    Raises
    ------
    ValueError
        If ``L`` does not annihilate ``kernel``.
    DegenerateKernelError
        If ``strict`` and the zero eigenvalue is not simple.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import triangle_graph
    >>> from cyclecalc.spectral import det_red, laplacian
    >>> round(det_red(laplacian(triangle_graph())), 10)
    9.0
    """
    A = ensure_symmetric(_as_array(L))
    n = A.shape[0]
    x = np.ones(n) if kernel is None else np.asarray(kernel, dtype=float)
    if x.shape != (n,) or not np.any(x):
        raise ValueError("kernel must be a nonzero vector matching the matrix size.")
    scale = max(1.0, float(np.max(np.abs(A)))) if n else 1.0
    residual = float(np.max(np.abs(A @ x))) / float(np.max(np.abs(x))) if n else 0.0
    if residual > 1e-9 * scale:
        raise ValueError(f"Matrix does not annihilate the kernel vector (residual {residual:.3e}).")
    if n <= 1:
        return 1.0

    lam = symmetric_eigenvalues(A)
    n_zero = count_inertia(lam, tol).n_zero
    if n_zero != 1:
        msg = f"Zero eigenvalue has multiplicity {n_zero}; the reduced determinant vanishes."
        if strict:
            raise DegenerateKernelError(msg)
        logger.warning(msg)
        return 0.0

    P = sla.null_space(x[None, :])
    value = float(np.linalg.det(P.T @ A @ P))

    # cross-check against the product of the n-1 largest-magnitude eigenvalues
    keep = np.argsort(np.abs(lam))[1:]
    product = float(np.prod(lam[keep]))
    if not np.isclose(value, product, rtol=1e-6, atol=0.0):
        logger.warning(
            "Reduced determinant %.12g disagrees with eigenvalue product %.12g.", value, product
        )
    return value
