# src/cyclecalc/oracle/reference.py
r"""
Brute-force reference computations, independent of the cycle-space path.
"""

from __future__ import annotations

import itertools
from typing import Optional, Tuple

import networkx as nx
import numpy as np

from cyclecalc.exceptions import IdentityMismatchError
from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.graphs.core.cycles import incidence
from cyclecalc.oracle.eigen import Inertia, count_inertia, sym_eigen
from cyclecalc.utils import require_weighted_graph

__all__ = [
    "dense_laplacian",
    "brute_force_index",
    "brute_force_cycle_set",
]


@require_weighted_graph
def dense_laplacian(g: WeightedGraph) -> np.ndarray:
    r"""
    Laplacian assembled entry by entry from the edge list.

    Off-diagonal entries are :math:`\gamma_{vw}` and each diagonal entry is
    minus the sum of the weights at that vertex.
    """
    L = np.zeros((g.n_vertices, g.n_vertices))
    for u, v, w in g.edges:
        L[u, v] = L[v, u] = w
        L[u, u] -= w
        L[v, v] -= w
    return L


@require_weighted_graph
def brute_force_index(g: WeightedGraph, tol: Optional[float] = None) -> Inertia:
    r"""
    Inertia of the Laplacian by direct Jacobi eigensolve.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.
    tol : float, optional
        Relative zero threshold (default ``1e-9``).

    Returns
    -------
    Inertia

    Examples
    --------
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.oracle import brute_force_index
    >>> brute_force_index(ring_graph(3, (1, 1, -0.4))).n_plus
    0
    """
    return count_inertia(sym_eigen(dense_laplacian(g)).eigenvalues, tol)


def _signed_cycle_vector(g: WeightedGraph, nodes) -> np.ndarray:
    """Edge vector of a closed vertex walk, +1 where it runs tail to head."""
    G = g.nx_graph
    y = np.zeros(g.n_edges, dtype=np.int64)
    for u, v in nx.utils.pairwise(nodes, cyclic=True):
        idx = G.edges[u, v]["index"]
        y[idx] += 1 if g.edges[idx].tail == u else -1
    return y


@require_weighted_graph
def brute_force_cycle_set(g: WeightedGraph, max_rank: int = 6) -> Tuple[int, ...]:
    r"""
    Cycle set by enumerating the cycle space from a networkx cycle basis.

    Every combination with coefficients in :math:`\{-1, 0, 1\}` of the cycles
    returned by :func:`networkx.cycle_basis` is checked to lie in
    :math:`\ker B`, and the union of the supports is compared with the
    complement of the bridges.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.
    max_rank : int
        Refuse graphs whose cycle rank exceeds this, since the work is
        :math:`3^C`.

    Returns
    -------
    tuple of int
        Ascending edge indices.

    Raises
    ------
    IdentityMismatchError
        If a combination leaves :math:`\ker B`, or the supports disagree with
        the bridge complement.
    """
    cycles = nx.cycle_basis(g.nx_graph)
    C = len(cycles)
    if C > max_rank:
        raise ValueError(f"Cycle rank {C} exceeds max_rank={max_rank}.")
    if C == 0:
        return ()

    Y = np.column_stack([_signed_cycle_vector(g, nodes) for nodes in cycles])
    coeffs = np.array(list(itertools.product((-1, 0, 1), repeat=C)), dtype=np.int64)
    combos = Y @ coeffs.T
    if np.any(incidence(g).B @ combos):
        raise IdentityMismatchError("A cycle combination left the kernel of the incidence matrix.")
    support = np.any(combos != 0, axis=1)

    G = g.nx_graph
    bridges = {G.edges[u, v]["index"] for u, v in nx.bridges(G)}
    if set(np.flatnonzero(support).tolist()) != set(range(g.n_edges)) - bridges:
        raise IdentityMismatchError("Cycle-space supports disagree with the bridge complement.")
    return tuple(int(i) for i in np.flatnonzero(support))
