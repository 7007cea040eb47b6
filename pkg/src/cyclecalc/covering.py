# src/cyclecalc/covering.py
r"""
Finite covering trees of weighted graphs.

A fundamental domain of the universal cover of a connected graph :math:`G`
is a tree :math:`T` containing each edge of :math:`G` exactly once, together
with a vertex map :math:`\varphi: V(T) \to V(G)` that is a weight-preserving
graph homomorphism. It is built directly: the vertices of :math:`G` joined
by the edges of a spanning tree, plus one fresh leaf for every non-tree edge.
The original vertices are the primary representatives.

Two matrices relate :math:`T` and :math:`G`: :math:`X` with
:math:`X_{a v} = 1` iff :math:`\varphi(a) = v`, for which
:math:`X^\top L_T X = L_G`; and :math:`Q`, whose columns are
:math:`e_w - e_{\mathrm{prim}(\varphi(w))}` for the duplicated vertices
:math:`w` and span the orthogonal complement of the columns of :math:`X`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.graphs.core.cycles import (
    CycleBasis,
    SpanningTree,
    incidence,
    spanning_tree,
)
from cyclecalc.spectral.laplacian import laplacian
from cyclecalc.utils import require_weighted_graph

__all__ = [
    "CoverDomain",
    "ProjectionPair",
    "build_cover",
    "build_projections",
    "laplacian_restriction_check",
    "cycle_basis_via_cover",
    "cover_cycle_form",
    "tree_incidence_rank",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverDomain:
    r"""
    Fundamental domain :math:`T` of the universal cover of a graph.

    Parameters
    ----------
    tree : WeightedGraph
        The tree :math:`T`, with :math:`|E(G)| + 1` vertices.
    phi : tuple of int
        :math:`\varphi(a)` for each vertex :math:`a` of :math:`T`.
    edge_correspondence : tuple of int
        Index in :math:`G` of each edge of :math:`T`.
    prim : tuple of int
        Primary representative in :math:`T` of each vertex of :math:`G`.
    duplicates : tuple of int
        The non-primary vertices of :math:`T`, one per non-tree edge of
        :math:`G` and in that order.
    n_graph_vertices : int
        :math:`|V(G)|`.
    """
    tree: WeightedGraph
    phi: Tuple[int, ...]
    edge_correspondence: Tuple[int, ...]
    prim: Tuple[int, ...]
    duplicates: Tuple[int, ...]
    n_graph_vertices: int

    @property
    def cycle_rank(self) -> int:
        return self.tree.n_vertices - self.n_graph_vertices

    def to_edge_list_text(self, labels: Optional[Sequence[int]] = None) -> str:
        """
        Edge list of :math:`T` followed by the vertex map as comment lines.

        ``labels`` renames the vertices of :math:`G` in the map, e.g. to the
        ids of the file the graph was read from.
        """
        names = tuple(range(self.n_graph_vertices)) if labels is None else tuple(labels)
        lines = [
            f"# cover tree: {self.tree.n_vertices} vertices, {self.tree.n_edges} edges, "
            f"|V(T)| - |V(G)| = {self.cycle_rank}"
        ]
        lines += [f"{e.tail} {e.head} {e.weight!r}" for e in self.tree.edges]
        lines += [f"# phi {a} -> {names[v]}" for a, v in enumerate(self.phi)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ProjectionPair:
    r"""
    Projection matrices :math:`X` (``N_T x N_G``) and :math:`Q` (``N_T x C``).
    """
    X: np.ndarray
    Q: np.ndarray


@require_weighted_graph
def build_cover(g: WeightedGraph, t: Optional[SpanningTree] = None) -> CoverDomain:
    r"""
    Construct the fundamental domain of the universal cover.

    Tree edges of ``t`` are copied between primary vertices; the
    :math:`k`-th non-tree edge :math:`(u, v, \gamma)` becomes an edge from
    :math:`u` to a new leaf :math:`N + k` with :math:`\varphi(N + k) = v`.
    Edge :math:`j` of :math:`T` corresponds to edge :math:`j` of :math:`G`,
    with the same orientation and weight.

    Parameters
    ----------
    g : WeightedGraph
        A connected graph.
    t : SpanningTree, optional
        Spanning tree to use; defaults to the BFS tree.

    Returns
    -------
    CoverDomain

    Raises
    ------
    NotConnectedError
        If ``g`` is not connected.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import diamond_graph
    >>> from cyclecalc.covering import build_cover
    >>> c = build_cover(diamond_graph())
    >>> c.tree.n_vertices, c.tree.n_edges, c.cycle_rank
    (6, 5, 2)
    """
    if t is None:
        t = spanning_tree(g)
    n = g.n_vertices
    phi = list(range(n))
    leaf_of = {}
    for k, j in enumerate(t.non_tree_edges):
        leaf_of[j] = n + k
        phi.append(g.edges[j].head)

    edges = []
    for j, e in enumerate(g.edges):
        head = leaf_of.get(j, e.head)
        edges.append((e.tail, head, e.weight))

    tree = WeightedGraph(n + len(leaf_of), edges, name=f"Cover of {g.name or 'G'}")
    cover = CoverDomain(
        tree=tree,
        phi=tuple(phi),
        edge_correspondence=tuple(range(g.n_edges)),
        prim=tuple(range(n)),
        duplicates=tuple(range(n, n + len(leaf_of))),
        n_graph_vertices=n,
    )
    logger.debug("Cover tree has %d vertices for a graph with %d.", tree.n_vertices, n)
    return cover


def build_projections(c: CoverDomain) -> ProjectionPair:
    r"""
    Build the projection matrices :math:`X` and :math:`Q` of a cover.

    Returns
    -------
    ProjectionPair
        Integer matrices with :math:`Q^\top X = 0`.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.covering import build_cover, build_projections
    >>> build_projections(build_cover(ring_graph(3))).Q.ravel()
    array([ 0,  0, -1,  1])
    """
    n_t = c.tree.n_vertices
    X = np.zeros((n_t, c.n_graph_vertices), dtype=np.int64)
    X[np.arange(n_t), list(c.phi)] = 1
    Q = np.zeros((n_t, len(c.duplicates)), dtype=np.int64)
    for k, w in enumerate(c.duplicates):
        Q[c.prim[c.phi[w]], k] = -1
        Q[w, k] = 1
    return ProjectionPair(X, Q)


@require_weighted_graph
def laplacian_restriction_check(
    g: WeightedGraph,
    c: CoverDomain,
    pp: ProjectionPair,
    atol: float = 1e-12,
) -> bool:
    r"""
    Check :math:`X^\top L_T X = L_G` entrywise to ``atol``.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import diamond_graph
    >>> from cyclecalc.covering import build_cover, build_projections, laplacian_restriction_check
    >>> G = diamond_graph(1.0, 2.0, -0.5, 0.7, 3.0)
    >>> c = build_cover(G)
    >>> laplacian_restriction_check(G, c, build_projections(c))
    True
    """
    X = pp.X.astype(float)
    projected = X.T @ laplacian(c.tree).L @ X
    return bool(np.allclose(projected, laplacian(g).L, rtol=0.0, atol=atol))


def cycle_basis_via_cover(c: CoverDomain, pp: ProjectionPair) -> CycleBasis:
    r"""
    Cycle basis of :math:`G` obtained by solving :math:`B_T r = q` on the cover.

    For each column :math:`q = e_w - e_{\mathrm{prim}}` of :math:`Q` the
    solution :math:`r` is the signed edge path from :math:`w` to its primary
    representative in :math:`T`. Transported to :math:`G` by the edge
    correspondence it is a cycle, the negative of the fundamental cycle of
    the non-tree edge ending at :math:`w`.

    Returns
    -------
    CycleBasis
    """
    T = c.tree
    n_edges_g = len(c.edge_correspondence)
    weights = np.zeros(n_edges_g)
    for k, gi in enumerate(c.edge_correspondence):
        weights[gi] = T.edges[k].weight

    columns = []
    for k in range(pp.Q.shape[1]):
        q = pp.Q[:, k]
        start = int(np.flatnonzero(q == 1)[0])
        end = int(np.flatnonzero(q == -1)[0])
        r = np.zeros(n_edges_g, dtype=np.int64)
        for x, y in nx.utils.pairwise(nx.shortest_path(T.nx_graph, start, end)):
            idx = T.edge_index(x, y)
            r[c.edge_correspondence[idx]] += 1 if T.edges[idx].tail == x else -1
        columns.append(r)

    Y = np.column_stack(columns) if columns else np.zeros((n_edges_g, 0), dtype=np.int64)
    return CycleBasis(Y=Y, D=weights)


def cover_cycle_form(c: CoverDomain, pp: ProjectionPair) -> np.ndarray:
    r"""
    Cycle form from the inverse tree Laplacian: :math:`Q^\top (L_T + \mathbf{1}\mathbf{1}^\top/N_T)^{-1} Q`.

    The shifted matrix inverts :math:`L_T` on :math:`\mathbf{1}^\perp`, which
    contains the columns of :math:`Q`; the result equals the cycle form of
    :math:`G` in the fundamental basis of the spanning tree used to build
    the cover.
    """
    n_t = c.tree.n_vertices
    Q = pp.Q.astype(float)
    if Q.shape[1] == 0:
        return np.zeros((0, 0))
    shifted = laplacian(c.tree).L + np.full((n_t, n_t), 1.0 / n_t)
    Z = Q.T @ np.linalg.solve(shifted, Q)
    return 0.5 * (Z + Z.T)


def tree_incidence_rank(c: CoverDomain) -> Tuple[int, int]:
    r"""Nullities of :math:`B_T` and :math:`B_T^\top`; a tree gives ``(0, 1)``."""
    B = incidence(c.tree)
    return B.nullity, B.shape[0] - B.rank
