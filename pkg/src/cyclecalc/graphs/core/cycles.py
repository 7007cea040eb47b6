# src/cyclecalc/graphs/core/cycles.py
r"""
Incidence matrices, spanning forests and fundamental cycles.

Combinatorial objects here are kept in exact integer arithmetic; conversion
to floating point happens only in the spectral layer.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, NamedTuple, Tuple

import networkx as nx
import numpy as np

from cyclecalc.exceptions import NotConnectedError
from cyclecalc.graphs.core.basics import WeightedGraph
from cyclecalc.metadata import quantity_metadata
from cyclecalc.utils import require_weighted_graph

__all__ = [
    "IncidenceMatrix",
    "SpanningTree",
    "CycleBasis",
    "Components",
    "EdgePartition",
    "SignFilter",
    "incidence",
    "connected_components",
    "sign_subgraph",
    "spanning_forest",
    "spanning_tree",
    "cycle_basis",
    "fundamental_cycle",
    "cycle_rank",
    "edge_partition",
    "cycle_set",
    "tree_set",
]

logger = logging.getLogger(__name__)

SignFilter = Literal["all", "positive", "negative"]


@dataclass(frozen=True)
class IncidenceMatrix:
    r"""
    Signed incidence matrix :math:`B` of a weighted graph.

    Column :math:`e` has :math:`+1` at the tail and :math:`-1` at the head of
    edge :math:`e`, so :math:`B^\top \mathbf{1} = 0`.
    """
    B: np.ndarray

    @property
    def shape(self) -> Tuple[int, int]:
        return self.B.shape

    @property
    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.B)) if self.B.size else 0

    @property
    def nullity(self) -> int:
        """Dimension of the cycle space :math:`\\ker B`."""
        return self.B.shape[1] - self.rank


@dataclass(frozen=True)
class SpanningTree:
    r"""
    A BFS spanning forest, one tree per connected component.

    Parameters
    ----------
    tree_edges : tuple of int
        Indices of forest edges, ascending.
    non_tree_edges : tuple of int
        Indices of the remaining edges, ascending. Each defines one
        fundamental cycle.
    parent : tuple of int
        Parent vertex of each vertex, ``-1`` at roots.
    parent_edge : tuple of int
        Index of the edge to the parent, ``-1`` at roots.
    depth : tuple of int
        Distance from the root of the vertex's component.
    roots : tuple of int
        Root of each component, ascending; ``roots[0] == 0`` whenever the
        graph has a vertex.
    """
    tree_edges: Tuple[int, ...]
    non_tree_edges: Tuple[int, ...]
    parent: Tuple[int, ...]
    parent_edge: Tuple[int, ...]
    depth: Tuple[int, ...]
    roots: Tuple[int, ...]

    @property
    def is_spanning_tree(self) -> bool:
        return len(self.roots) <= 1

    def path_to_root(self, v: int) -> list:
        """Vertices from ``v`` up to its root, inclusive."""
        path = [v]
        while self.parent[path[-1]] >= 0:
            path.append(self.parent[path[-1]])
        return path


@dataclass(frozen=True)
class CycleBasis:
    r"""
    Oriented cycle basis :math:`Y` together with the weight diagonal :math:`D`.

    Parameters
    ----------
    Y : numpy.ndarray
        Integer matrix of shape ``(|E|, C)`` with entries in :math:`\{-1, 0, 1\}`.
    D : numpy.ndarray
        Edge weights :math:`\gamma_e`, the diagonal of :math:`D_G`.
    non_tree_edges : tuple of int
        The edge carrying the leading ``+1`` of each column, for fundamental
        bases; empty for bases produced otherwise.
    """
    Y: np.ndarray
    D: np.ndarray
    non_tree_edges: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        """Number of basis cycles :math:`C`."""
        return int(self.Y.shape[1])


class Components(NamedTuple):
    count: int
    labels: Tuple[int, ...]


class EdgePartition(NamedTuple):
    cycle_set: Tuple[int, ...]
    tree_set: Tuple[int, ...]


# ----------------------------------------------------------------------
# Incidence and components
# ----------------------------------------------------------------------
@require_weighted_graph
def incidence(g: WeightedGraph) -> IncidenceMatrix:
    r"""
    Compute the signed incidence matrix of a weighted graph.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.

    Returns
    -------
    IncidenceMatrix
        ``B`` of shape ``(N, |E|)`` and integer dtype.

    Examples
    --------
    >>> from cyclecalc.graphs.core import WeightedGraph, incidence
    >>> incidence(WeightedGraph(2, [(0, 1, 2.0)])).B
    array([[ 1],
           [-1]])
    """
    B = np.zeros((g.n_vertices, g.n_edges), dtype=np.int64)
    for idx, e in enumerate(g.edges):
        B[e.tail, idx] = 1
        B[e.head, idx] = -1
    return IncidenceMatrix(B)


@require_weighted_graph
def sign_subgraph(g: WeightedGraph, sign: SignFilter) -> Tuple[WeightedGraph, Tuple[int, ...]]:
    r"""
    Spanning subgraph keeping only the edges of one sign.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.
    sign : {"all", "positive", "negative"}
        Which edges to keep.

    Returns
    -------
    (WeightedGraph, tuple of int)
        The subgraph on the same vertex set, and for each of its edges the
        index of that edge in ``g``.
    """
    if sign == "all":
        kept = tuple(range(g.n_edges))
    elif sign == "positive":
        kept = g.positive_edges
    elif sign == "negative":
        kept = g.negative_edges
    else:
        raise ValueError(f"sign must be 'all', 'positive' or 'negative', got {sign!r}.")
    return g.edge_subgraph(kept), kept


@require_weighted_graph
@quantity_metadata(
    display_name="Number of components",
    notation=r"|G_\pm|",
    category="connectivity",
    aliases=("component count",),
)
def connected_components(g: WeightedGraph, sign_filter: SignFilter = "all") -> Components:
    r"""
    Count connected components of the subgraph retaining edges that pass a sign filter.

    Definition
    ----------
    The number of connected components of the spanning subgraph of
    :math:`G` on all vertices whose edges are those passing the filter.
    Isolated vertices count as components.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.
    sign_filter : {"all", "positive", "negative"}
        Edges to retain.

    Returns
    -------
    Components
        ``count`` and per-vertex ``labels``. Components are numbered by their
        smallest vertex.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import triangle_graph
    >>> from cyclecalc.graphs.core import connected_components
    >>> connected_components(triangle_graph((1, 1, -1)), "negative").count
    2
    """
    sub, _ = sign_subgraph(g, sign_filter)
    labels = [-1] * g.n_vertices
    comps = sorted(nx.connected_components(sub.nx_graph), key=min)
    for k, comp in enumerate(comps):
        for v in comp:
            labels[v] = k
    return Components(len(comps), tuple(labels))


# ----------------------------------------------------------------------
# Spanning forests and fundamental cycles
# ----------------------------------------------------------------------
@require_weighted_graph
def spanning_forest(g: WeightedGraph) -> SpanningTree:
    r"""
    Breadth-first spanning forest with ascending-neighbor order.

    Each component is rooted at its smallest vertex, and neighbors are
    visited in ascending vertex order, so the result depends only on ``g``.

    Parameters
    ----------
    g : WeightedGraph
        The input graph, not necessarily connected.

    Returns
    -------
    SpanningTree
    """
    n = g.n_vertices
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    seen = [False] * n
    roots = []
    G = g.nx_graph

    for root in range(n):
        if seen[root]:
            continue
        roots.append(root)
        seen[root] = True
        for u, v in nx.bfs_edges(G, root, sort_neighbors=sorted):
            seen[v] = True
            parent[v] = u
            parent_edge[v] = g.edge_index(u, v)
            depth[v] = depth[u] + 1

    tree = sorted(e for e in parent_edge if e >= 0)
    in_tree = set(tree)
    non_tree = [i for i in range(g.n_edges) if i not in in_tree]
    logger.debug(
        "Spanning forest: %d roots, %d tree edges, %d non-tree edges.",
        len(roots), len(tree), len(non_tree),
    )
    return SpanningTree(
        tree_edges=tuple(tree),
        non_tree_edges=tuple(non_tree),
        parent=tuple(parent),
        parent_edge=tuple(parent_edge),
        depth=tuple(depth),
        roots=tuple(roots),
    )


@require_weighted_graph
def spanning_tree(g: WeightedGraph) -> SpanningTree:
    r"""
    BFS spanning tree rooted at vertex 0.

    Raises
    ------
    NotConnectedError
        If ``g`` is empty or has more than one component.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import diamond_graph
    >>> from cyclecalc.graphs.core import spanning_tree
    >>> t = spanning_tree(diamond_graph())
    >>> len(t.tree_edges), len(t.non_tree_edges)
    (3, 2)
    """
    if g.n_vertices == 0:
        raise NotConnectedError("The empty graph has no spanning tree.")
    forest = spanning_forest(g)
    if not forest.is_spanning_tree:
        raise NotConnectedError(
            f"Graph has {len(forest.roots)} connected components; a spanning tree needs one."
        )
    return forest


def _tree_step(g: WeightedGraph, edge: int, start: int) -> int:
    """Coefficient of ``edge`` when traversed starting at vertex ``start``."""
    return 1 if g.edges[edge].tail == start else -1


def fundamental_cycle(g: WeightedGraph, t: SpanningTree, edge: int) -> np.ndarray:
    r"""
    Oriented fundamental cycle of a non-tree edge.

    The cycle traverses ``edge`` from tail to head (coefficient ``+1``) and
    returns to the tail along the unique forest path. Each tree edge gets
    ``+1`` when traversed tail to head and ``-1`` otherwise.

    Returns
    -------
    numpy.ndarray
        Integer vector of length ``|E|``.
    """
    y = np.zeros(g.n_edges, dtype=np.int64)
    y[edge] = 1
    tail, head = g.edges[edge].tail, g.edges[edge].head

    # climb from head and tail to their lowest common ancestor
    x, z = head, tail
    down = []
    while x != z:
        if t.depth[x] >= t.depth[z]:
            pe = t.parent_edge[x]
            y[pe] += _tree_step(g, pe, x)
            x = t.parent[x]
        else:
            down.append(z)
            z = t.parent[z]
    # descend from the ancestor to the tail: traverse parent -> child
    for child in down:
        pe = t.parent_edge[child]
        y[pe] += _tree_step(g, pe, t.parent[child])
    return y


@require_weighted_graph
def cycle_basis(g: WeightedGraph, t: SpanningTree) -> CycleBasis:
    r"""
    Fundamental cycle basis with respect to a spanning tree or forest.

    Column :math:`j` is the fundamental cycle of the :math:`j`-th non-tree
    edge: that edge with coefficient :math:`+1` plus the signed tree path
    closing the cycle. Every column satisfies :math:`B y = 0`.

    Parameters
    ----------
    g : WeightedGraph
        The input graph.
    t : SpanningTree
        A spanning tree (or forest) of ``g``.

    Returns
    -------
    CycleBasis
        ``Y`` of shape ``(|E|, C)`` and ``D`` the edge weights.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> from cyclecalc.graphs.core import cycle_basis, spanning_tree
    >>> G = ring_graph(4)
    >>> cycle_basis(G, spanning_tree(G)).Y.ravel()
    array([ 1,  1,  1, -1])
    """
    if len(t.parent) != g.n_vertices:
        raise ValueError("Spanning tree does not belong to this graph.")
    columns = [fundamental_cycle(g, t, j) for j in t.non_tree_edges]
    if columns:
        Y = np.column_stack(columns)
    else:
        Y = np.zeros((g.n_edges, 0), dtype=np.int64)
    return CycleBasis(Y=Y, D=g.weights, non_tree_edges=tuple(t.non_tree_edges))


@require_weighted_graph
@quantity_metadata(
    display_name="Cycle rank",
    notation=r"C",
    category="cycle space",
    aliases=("cyclomatic number", "first Betti number"),
)
def cycle_rank(g: WeightedGraph) -> int:
    r"""
    Dimension of the cycle space of ``g``.

    Definition
    ----------
    :math:`C = |E| - |V| + c(G)`, where :math:`c(G)` is the number of
    connected components; for connected graphs :math:`C = |E| - |V| + 1`.
    """
    return g.n_edges - g.n_vertices + connected_components(g).count


@require_weighted_graph
def edge_partition(g: WeightedGraph) -> EdgePartition:
    r"""
    Split the edges into the cycle set and the tree set.

    An edge is in the cycle set iff some cycle-space vector is nonzero on it,
    i.e. iff it lies on a cycle; the tree set is the complement (the edges
    contained in every spanning tree).
    """
    basis = cycle_basis(g, spanning_forest(g))
    on_cycle = np.any(basis.Y != 0, axis=1) if basis.size else np.zeros(g.n_edges, dtype=bool)
    cyc = tuple(int(i) for i in np.flatnonzero(on_cycle))
    tree = tuple(int(i) for i in np.flatnonzero(~on_cycle))
    return EdgePartition(cycle_set=cyc, tree_set=tree)


def cycle_set(g: WeightedGraph) -> Tuple[int, ...]:
    """Indices of edges lying on some cycle."""
    return edge_partition(g).cycle_set


def tree_set(g: WeightedGraph) -> Tuple[int, ...]:
    """Indices of edges lying on no cycle (bridges)."""
    return edge_partition(g).tree_set
