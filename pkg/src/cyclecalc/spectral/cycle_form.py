# src/cyclecalc/spectral/cycle_form.py
r"""
The cycle form of a weighted graph and the index formula it carries.

For a cycle basis :math:`Y` and weight diagonal :math:`D`, the cycle form is
:math:`Z_G = -Y^\top D^{-1} Y`. The number of positive eigenvalues of the
Laplacian is the number of negative edges minus the number of positive
eigenvalues of :math:`Z_G`, which moves the computation from the vertex
space (dimension :math:`N`) to the cycle space (dimension :math:`C`).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from cyclecalc.exceptions import (
    IdentityMismatchError,
    NotConnectedError,
    SingularCycleFormError,
)
from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.graphs.core.cycles import (
    CycleBasis,
    connected_components,
    cycle_basis,
    edge_partition,
    sign_subgraph,
    spanning_forest,
    spanning_tree,
)
from cyclecalc.metadata import quantity_metadata
from cyclecalc.oracle.eigen import Inertia
from cyclecalc.spectral.laplacian import det_red, inertia, laplacian
from cyclecalc.utils import require_weighted_graph

__all__ = [
    "CycleForm",
    "CycleIndex",
    "IndexBounds",
    "MixedCyclePartition",
    "DetRedReport",
    "cycle_form",
    "cycle_form_matrix",
    "index_via_cycles",
    "index_bounds",
    "tree_set_lower_bound",
    "mixed_cycle_reduction",
    "detred_identity_check",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleForm:
    r"""
    Cycle form :math:`Z = -Y^\top D^{-1} Y` together with the basis it was built from.
    """
    Z: np.ndarray
    basis: CycleBasis

    @property
    def size(self) -> int:
        return int(self.Z.shape[0])

    @property
    def determinant(self) -> float:
        """:math:`\\det Z`, with the empty determinant equal to 1."""
        return float(np.linalg.det(self.Z)) if self.size else 1.0


@dataclass(frozen=True)
class CycleIndex:
    r"""
    Laplacian inertia obtained from the cycle form.

    Parameters
    ----------
    inertia : Inertia
        Inertia of :math:`L_G`.
    n_negative_edges : int
        Number of edges with :math:`\gamma_e < 0`.
    cycle_rank : int
        Dimension :math:`C` of the cycle space.
    z_inertia : Inertia
        Inertia of :math:`Z_G`.
    degenerate : bool
        ``True`` when :math:`Z_G` is singular, i.e. :math:`L_G` has more
        than one zero eigenvalue.
    """
    inertia: Inertia
    n_negative_edges: int
    cycle_rank: int
    z_inertia: Inertia
    degenerate: bool

    def to_dict(self) -> dict:
        return {
            "inertia": self.inertia.to_dict(),
            "n_negative_edges": self.n_negative_edges,
            "cycle_rank": self.cycle_rank,
            "z_inertia": self.z_inertia.to_dict(),
            "degenerate": self.degenerate,
        }


class IndexBounds(NamedTuple):
    lower: int
    upper: int


@dataclass(frozen=True)
class MixedCyclePartition:
    r"""
    Cycle basis split into positive-only, negative-only and mixed cycles.

    Parameters
    ----------
    plus_basis, minus_basis, mixed_basis : numpy.ndarray
        Integer ``(|E|, k)`` blocks spanning :math:`S_+`, :math:`S_-` and a
        completion to the whole cycle space.
    A_M, B_plus, B_minus, Z_plus, Z_minus : numpy.ndarray
        Blocks of the cycle form in the basis ``[mixed | plus | minus]``.
    schur : numpy.ndarray
        :math:`A_M - B_+ Z_+^{-1} B_+^\top - B_- Z_-^{-1} B_-^\top`.
    z_inertia : Inertia
        Inertia of :math:`Z_G` assembled from the reduction.
    direct_inertia : Inertia
        Inertia of :math:`Z_G` from a direct eigensolve of the full form.
    """
    plus_basis: np.ndarray
    minus_basis: np.ndarray
    mixed_basis: np.ndarray
    A_M: np.ndarray
    B_plus: np.ndarray
    B_minus: np.ndarray
    Z_plus: np.ndarray
    Z_minus: np.ndarray
    schur: np.ndarray
    z_inertia: Inertia
    direct_inertia: Inertia

    @property
    def dim_plus(self) -> int:
        return int(self.plus_basis.shape[1])

    @property
    def dim_minus(self) -> int:
        return int(self.minus_basis.shape[1])

    @property
    def dim_mixed(self) -> int:
        return int(self.mixed_basis.shape[1])

    @property
    def agrees(self) -> bool:
        return self.z_inertia.n_plus == self.direct_inertia.n_plus


@dataclass(frozen=True)
class DetRedReport:
    r"""
    Both sides of the reduced-determinant identity.

    ``lhs`` is :math:`\det_{\mathrm{red}}(L_G)/N` and ``rhs`` is
    :math:`\det(Z_G)\prod_e\gamma_e`. The magnitudes agree; ``sign_factor``
    is the observed sign of ``lhs/rhs`` and ``expected_sign`` is
    :math:`(-1)^{|E|}`.
    """
    lhs: float
    rhs: float
    ratio: float
    sign_factor: int
    expected_sign: int
    det_z: float
    weight_product: float

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "abs_ratio": abs(self.ratio),
            "sign_factor": self.sign_factor,
            "expected_sign": self.expected_sign,
            "det_z": self.det_z,
            "weight_product": self.weight_product,
        }


# ----------------------------------------------------------------------
# Cycle form
# ----------------------------------------------------------------------
def cycle_form_matrix(Y: np.ndarray, weights: np.ndarray) -> np.ndarray:
    r"""Return :math:`-Y^\top \operatorname{diag}(\gamma)^{-1} Y` for any edge-space matrix ``Y``."""
    Yf = np.asarray(Y, dtype=float)
    Z = -(Yf.T / np.asarray(weights, dtype=float)) @ Yf
    return 0.5 * (Z + Z.T)


@require_weighted_graph
@quantity_metadata(
    display_name="Cycle form",
    notation=r"Z_G",
    category="cycle space",
    aliases=("cycle intersection matrix",),
)
def cycle_form(g: WeightedGraph, basis: Optional[CycleBasis] = None) -> CycleForm:
    r"""
    Compute the cycle form of a weighted graph.

    Definition
    ----------
    For a basis :math:`y_1, \dots, y_C` of the cycle space, collected as the
    columns of :math:`Y`, and :math:`D = \operatorname{diag}(\gamma_e)`,
    :math:`Z_G = -Y^\top D^{-1} Y`. Its inertia does not depend on the
    choice of basis.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.
    basis : CycleBasis, optional
        Cycle basis to use; defaults to the fundamental basis of the BFS
        spanning forest.

    Returns
    -------
    CycleForm

    Examples
    --------
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.spectral import cycle_form
    >>> cycle_form(ring_graph(4, 2.0)).Z
    array([[-2.]])
    """
    if basis is None:
        basis = cycle_basis(g, spanning_forest(g))
    return CycleForm(cycle_form_matrix(basis.Y, g.weights), basis)


@require_weighted_graph
@quantity_metadata(
    display_name="Laplacian index via cycles",
    notation=r"n_+(L_G) = \#\{e : \gamma_e < 0\} - n_+(Z_G)",
    category="cycle space",
)
def index_via_cycles(
    g: WeightedGraph,
    tol: Optional[float] = None,
    *,
    basis: Optional[CycleBasis] = None,
    method: Optional[str] = None,
) -> CycleIndex:
    r"""
    Laplacian inertia from the number of negative edges and the cycle form.

    Definition
    ----------
    For connected :math:`G` with nonzero weights,
    :math:`n_+(L_G) = \#\{e : \gamma_e < 0\} - n_+(Z_G)` whenever
    :math:`Z_G` is nonsingular. When :math:`Z_G` is singular each zero
    eigenvalue of :math:`Z_G` is an extra zero eigenvalue of :math:`L_G`, and
    :math:`n_+(L_G) = \#\{e : \gamma_e < 0\} - n_+(Z_G) - n_0(Z_G)`,
    :math:`n_0(L_G) = 1 + n_0(Z_G)`.

    Parameters
    ----------
    g : WeightedGraph
        A connected graph.
    tol : float, optional
        Relative zero threshold for the inertia of :math:`Z_G`.
    basis : CycleBasis, optional
        Cycle basis; defaults to the fundamental basis of the BFS spanning tree.
    method : {"jacobi", "lapack"}, optional
        Eigensolver backend.

    Returns
    -------
    CycleIndex

    Raises
    ------
    NotConnectedError
        If ``g`` is not connected.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.spectral import index_via_cycles
    >>> index_via_cycles(ring_graph(3, (1, 1, -0.4))).inertia.n_plus
    0
    >>> index_via_cycles(ring_graph(3, (1, 1, -0.6))).inertia.n_plus
    1
    """
    if basis is None:
        basis = cycle_basis(g, spanning_tree(g))
    elif not g.is_connected():
        raise NotConnectedError("index_via_cycles requires a connected graph.")

    Z = cycle_form(g, basis)
    z_in = inertia(Z.Z, tol, method=method)
    n_neg = len(g.negative_edges)
    n_plus = n_neg - z_in.n_plus - z_in.n_zero
    if n_plus < 0:
        raise IdentityMismatchError(
            f"Cycle form has {z_in.n_plus + z_in.n_zero} nonnegative eigenvalues "
            f"but the graph has only {n_neg} negative edges."
        )
    n_zero = 1 + z_in.n_zero
    degenerate = z_in.n_zero > 0
    if degenerate:
        logger.warning(
            "Cycle form is singular (n0(Z) = %d); the Laplacian has %d zero eigenvalues.",
            z_in.n_zero, n_zero,
        )
    result = Inertia(n_plus, n_zero, g.n_vertices - n_plus - n_zero)
    return CycleIndex(
        inertia=result,
        n_negative_edges=n_neg,
        cycle_rank=Z.size,
        z_inertia=z_in,
        degenerate=degenerate,
    )


@require_weighted_graph
@quantity_metadata(
    display_name="Component bounds on the Laplacian index",
    notation=r"|G_+| - 1 \le n_+(L_G) \le |V| - |G_-|",
    category="cycle space",
)
def index_bounds(g: WeightedGraph) -> IndexBounds:
    r"""
    Lower and upper bounds on :math:`n_+(L_G)` from sign-filtered components.

    Definition
    ----------
    With :math:`|G_\pm|` the number of components of the spanning subgraph
    on the positive (negative) edges, isolated vertices included,
    :math:`|G_+| - 1 \le n_+(L_G) \le |V| - |G_-|`.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import path_graph
    >>> from cyclecalc.spectral import index_bounds
    >>> index_bounds(path_graph((1.0, -1.0, -2.0)))
    IndexBounds(lower=2, upper=2)
    """
    lower = connected_components(g, "positive").count - 1
    upper = g.n_vertices - connected_components(g, "negative").count
    return IndexBounds(lower, upper)


@require_weighted_graph
def tree_set_lower_bound(g: WeightedGraph) -> int:
    r"""
    Number of negative edges lying on no cycle.

    Each such edge contributes a positive eigenvalue that no cycle can
    cancel, so :math:`n_+(L_G)` is at least this count.
    """
    return sum(1 for i in edge_partition(g).tree_set if g.edges[i].weight < 0)


# ----------------------------------------------------------------------
# Mixed-cycle reduction
# ----------------------------------------------------------------------
def _embedded_sign_basis(g: WeightedGraph, sign: str) -> np.ndarray:
    sub, kept = sign_subgraph(g, sign)
    Ysub = cycle_basis(sub, spanning_forest(sub)).Y
    Y = np.zeros((g.n_edges, Ysub.shape[1]), dtype=np.int64)
    if kept:
        Y[list(kept), :] = Ysub
    return Y


@require_weighted_graph
def mixed_cycle_reduction(
    g: WeightedGraph,
    tol: Optional[float] = None,
    *,
    method: Optional[str] = None,
) -> MixedCyclePartition:
    r"""
    Reduce the index of the cycle form to its mixed-cycle Schur complement.

    Cycles supported on positive edges only span :math:`S_+`, where the
    cycle form is negative definite; cycles on negative edges only span
    :math:`S_-`, where it is positive definite; and the two are orthogonal
    for the form. Completing :math:`S_+ \oplus S_-` by mixed cycles and
    taking the Schur complement gives

    .. math::
        n_+(Z_G) = \dim S_- + n_+\big(A_M - B_+ Z_+^{-1} B_+^\top
        - B_- Z_-^{-1} B_-^\top\big).

    Parameters
    ----------
    g : WeightedGraph
        A connected graph.
    tol : float, optional
        Relative zero threshold.
    method : {"jacobi", "lapack"}, optional
        Eigensolver backend.

    Returns
    -------
    MixedCyclePartition

    Raises
    ------
    NotConnectedError
        If ``g`` is not connected.
    IdentityMismatchError
        If the reduced index disagrees with the index of the cycle form.
    """
    fundamental = cycle_basis(g, spanning_tree(g)).Y
    C = fundamental.shape[1]
    Yp = _embedded_sign_basis(g, "positive")
    Ym = _embedded_sign_basis(g, "negative")

    # greedy completion by the fundamental cycles in index order
    current = np.hstack([Yp, Ym]).astype(float)
    rank = current.shape[1]
    mixed = []
    for j in range(C):
        if rank == C:
            break
        trial = np.hstack([current, fundamental[:, [j]]])
        if np.linalg.matrix_rank(trial) > rank:
            current = trial
            rank += 1
            mixed.append(fundamental[:, j])
    M = np.column_stack(mixed) if mixed else np.zeros((g.n_edges, 0), dtype=np.int64)
    if rank != C:
        raise IdentityMismatchError(f"Basis completion reached rank {rank}, expected {C}.")

    W = np.hstack([M, Yp, Ym])
    Zw = cycle_form_matrix(W, g.weights)
    m, cp = M.shape[1], Yp.shape[1]
    A_M = Zw[:m, :m]
    B_plus = Zw[:m, m:m + cp]
    B_minus = Zw[:m, m + cp:]
    Z_plus = Zw[m:m + cp, m:m + cp]
    Z_minus = Zw[m + cp:, m + cp:]
    if np.any(Zw[m:m + cp, m + cp:] != 0):
        raise IdentityMismatchError("Positive and negative cycle blocks are not orthogonal.")

    schur = A_M.copy()
    if cp:
        schur -= B_plus @ np.linalg.solve(Z_plus, B_plus.T)
    if Ym.shape[1]:
        schur -= B_minus @ np.linalg.solve(Z_minus, B_minus.T)

    s_in = inertia(schur, tol, method=method)
    reduced = Inertia(
        Ym.shape[1] + s_in.n_plus,
        s_in.n_zero,
        cp + s_in.n_minus,
    )
    direct = inertia(Zw, tol, method=method)
    if reduced.n_plus != direct.n_plus:
        raise IdentityMismatchError(
            f"Mixed-cycle reduction gives n+ = {reduced.n_plus}, the cycle form gives {direct.n_plus}."
        )
    return MixedCyclePartition(
        plus_basis=Yp,
        minus_basis=Ym,
        mixed_basis=M,
        A_M=A_M,
        B_plus=B_plus,
        B_minus=B_minus,
        Z_plus=Z_plus,
        Z_minus=Z_minus,
        schur=0.5 * (schur + schur.T),
        z_inertia=reduced,
        direct_inertia=direct,
    )


# ----------------------------------------------------------------------
# Reduced determinant identity
# ----------------------------------------------------------------------
@require_weighted_graph
def detred_identity_check(
    g: WeightedGraph,
    tol: Optional[float] = None,
    *,
    rtol: float = 1e-8,
) -> DetRedReport:
    r"""
    Compare :math:`\det_{\mathrm{red}}(L_G)/N` with :math:`\det(Z_G)\prod_e\gamma_e`.

    The two agree in magnitude; with the sign convention used here
    :math:`\det_{\mathrm{red}}(L_G)/N = (-1)^{|E|}\det(Z_G)\prod_e\gamma_e`.

    Parameters
    ----------
    g : WeightedGraph
        A connected graph.
    tol : float, optional
        Relative zero threshold for singularity checks.
    rtol : float
        Relative tolerance for the magnitude comparison.

    Returns
    -------
    DetRedReport

    Raises
    ------
    NotConnectedError
        If ``g`` is not connected.
    SingularCycleFormError
        If :math:`Z_G` is singular.
    IdentityMismatchError
        If the magnitudes differ by more than ``rtol``.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import triangle_graph
    >>> from cyclecalc.spectral import detred_identity_check
    >>> rep = detred_identity_check(triangle_graph())
    >>> round(rep.lhs, 10), round(rep.rhs, 10), rep.sign_factor
    (3.0, -3.0, -1)
    """
    Z = cycle_form(g, cycle_basis(g, spanning_tree(g)))
    if Z.size and inertia(Z.Z, tol).n_zero:
        raise SingularCycleFormError("Cycle form is singular; the reduced determinant vanishes.")
    det_z = Z.determinant
    weight_product = float(np.prod(g.weights))
    lhs = det_red(laplacian(g), tol=tol, strict=True) / g.n_vertices
    rhs = det_z * weight_product
    ratio = lhs / rhs
    if not np.isclose(abs(ratio), 1.0, rtol=rtol, atol=0.0):
        raise IdentityMismatchError(
            f"|det_red(L)/N| = {abs(lhs):.12g} differs from |det(Z) prod(gamma)| = {abs(rhs):.12g}."
        )
    return DetRedReport(
        lhs=lhs,
        rhs=rhs,
        ratio=ratio,
        sign_factor=1 if ratio > 0 else -1,
        expected_sign=-1 if g.n_edges % 2 else 1,
        det_z=det_z,
        weight_product=weight_product,
    )
