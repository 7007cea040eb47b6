# src/cyclecalc/utils.py
"""
General utilities for CycleCalc.

Exports
-------
require_weighted_graph
    Decorator ensuring the first argument is a :class:`~cyclecalc.graphs.core.WeightedGraph`.
ensure_symmetric
    Validate a square matrix as symmetric and return its symmetrized float copy.
"""

from __future__ import annotations

from functools import wraps
from typing import Optional

import numpy as np

from cyclecalc.config import resolve_tol
from cyclecalc.exceptions import NotSymmetricError

__all__ = [
    "require_weighted_graph",
    "ensure_symmetric",
]


def require_weighted_graph(func):
    """
    Decorator that enforces the first argument to be a weighted graph.

    Raises
    ------
    TypeError
        If the first argument is not a :class:`~cyclecalc.graphs.core.WeightedGraph`.
    """
    @wraps(func)
    def wrapper(g, *args, **kwargs):
        # deferred: graphs.core imports this module
        from cyclecalc.graphs.core.basics import WeightedGraph

        if not isinstance(g, WeightedGraph):
            raise TypeError(
                f"Function '{func.__name__}' requires a WeightedGraph "
                f"as the first argument, but got {type(g).__name__}."
            )
        return func(g, *args, **kwargs)
    return wrapper


def ensure_symmetric(M, tol: Optional[float] = None) -> np.ndarray:
    r"""
    Return ``M`` as a symmetric float array, rejecting asymmetric input.

    Parameters
    ----------
    M : array_like
        Square matrix.
    tol : float, optional
        Relative asymmetry bound. The test is
        :math:`\max|M - M^\top| \le \mathrm{tol}\cdot\max(1, \max|M|)`.
        Defaults to the ``symmetry_tol`` setting.

    Returns
    -------
    numpy.ndarray
        :math:`(M + M^\top)/2` as ``float64``.

    Raises
    ------
    NotSymmetricError
        If ``M`` is not square or its asymmetry exceeds the bound.
    """
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetricError(f"Expected a square matrix, got shape {A.shape}.")
    if A.size == 0:
        return A.copy()
    tol = resolve_tol(tol, "symmetry_tol")
    scale = max(1.0, float(np.max(np.abs(A))))
    asym = float(np.max(np.abs(A - A.T)))
    if asym > tol * scale:
        raise NotSymmetricError(
            f"Matrix is not symmetric: max |M - M^T| = {asym:.3e} exceeds {tol * scale:.3e}."
        )
    return 0.5 * (A + A.T)
