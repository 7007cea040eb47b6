"""
Weighted graph generators.

Topologies come from NetworkX helpers; weights are attached in a fixed edge
order documented on each generator, so that weight vectors line up with edge
indices.
"""

from typing import Iterable, Sequence, Union

import networkx as nx

from cyclecalc.graphs.core.basics import WeightedGraph

__all__ = [
    "ring_graph",
    "path_graph",
    "star_graph",
    "triangle_graph",
    "diamond_graph",
    "theta_graph",
    "joined_triangles",
]

Weights = Union[float, Sequence[float]]


def _edge_weights(weights: Weights, m: int) -> list:
    if isinstance(weights, (int, float)):
        return [float(weights)] * m
    weights = [float(w) for w in weights]
    if len(weights) != m:
        raise ValueError(f"Expected {m} weights, got {len(weights)}.")
    return weights


def _path_vertices(s: int, t: int, k: int, next_free: int) -> list:
    """Vertices of a path with ``k`` edges from ``s`` to ``t`` using fresh internal ids."""
    return [s, *range(next_free, next_free + k - 1), t]


def ring_graph(n: int, weights: Weights = 1.0) -> WeightedGraph:
    r"""
    Return the weighted ring (cycle graph) :math:`R_n`.

    Edge :math:`i` joins :math:`i` and :math:`i+1` for :math:`i < n-1`; the
    last edge closes the ring and is stored as :math:`(0, n-1)`.

    Parameters
    ----------
    n : int
        Number of vertices, at least 3.
    weights : float or sequence of float
        A common weight or one weight per edge in the order above.

    Returns
    -------
    WeightedGraph

    Examples
    --------
    >>> from cyclecalc.graphs.generators import ring_graph
    >>> ring_graph(3, (1, 1, -0.4)).edges[-1]
    Edge(tail=0, head=2, weight=-0.4)
    """
    if n < 3:
        raise ValueError(f"A ring needs at least 3 vertices, got {n}.")
    w = _edge_weights(weights, n)
    edges = [(u, v, wi) for (u, v), wi in zip(nx.utils.pairwise(range(n), cyclic=True), w)]
    return WeightedGraph(n, edges, name=f"Ring R_{n}")


def path_graph(weights: Sequence[float]) -> WeightedGraph:
    r"""
    Return the path :math:`0 - 1 - \cdots - k` with edge :math:`i` joining :math:`i, i+1`.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import path_graph
    >>> path_graph((1, -1)).n_vertices
    3
    """
    w = _edge_weights(weights, len(weights))
    edges = [(u, v, wi) for (u, v), wi in zip(nx.utils.pairwise(range(len(w) + 1)), w)]
    return WeightedGraph(len(w) + 1, edges, name=f"Path P_{len(w) + 1}")


def star_graph(weights: Sequence[float]) -> WeightedGraph:
    r"""
    Return the star with center 0 and leaves :math:`1, \dots, k`; edge :math:`i` ends at leaf :math:`i+1`.
    """
    w = _edge_weights(weights, len(weights))
    edges = [(0, leaf, wi) for leaf, wi in zip(range(1, len(w) + 1), w)]
    return WeightedGraph(len(w) + 1, edges, name=f"Star S_{len(w)}")


def triangle_graph(weights: Weights = 1.0) -> WeightedGraph:
    r"""
    Return the triangle with edges :math:`(0,1), (1,2), (0,2)` in that order.

    Examples
    --------
    >>> from cyclecalc.graphs.generators import triangle_graph
    >>> [e[:2] for e in triangle_graph().edges]
    [(0, 1), (1, 2), (0, 2)]
    """
    a, b, c = _edge_weights(weights, 3)
    return WeightedGraph(3, [(0, 1, a), (1, 2, b), (0, 2, c)], name="Triangle")


def diamond_graph(
    a: float = 1.0,
    b: float = 1.0,
    c: float = 1.0,
    d: float = 1.0,
    e: float = 1.0,
) -> WeightedGraph:
    r"""
    Return the diamond graph: a 4-cycle with one chord.

    The diamond is the simplest graph of cycle rank 2. With vertices
    :math:`0, 1, 2, 3` the outer edges are
    :math:`a = (0,1), b = (1,2), c = (2,3), d = (0,3)` and the middle edge is
    :math:`e = (0,2)`; edges are stored in the order :math:`a, b, c, d, e`.
    The triangles are :math:`\{a, b, e\}` and :math:`\{c, d, e\}`.

    Parameters
    ----------
    a, b, c, d, e : float
        Edge weights.

    Returns
    -------
    WeightedGraph

    Examples
    --------
    >>> from cyclecalc.graphs.generators import diamond_graph
    >>> G = diamond_graph(e=-0.2)
    >>> G.n_vertices, G.n_edges, G.negative_edges
    (4, 5, (4,))
    """
    return WeightedGraph(
        4,
        [(0, 1, a), (1, 2, b), (2, 3, c), (0, 3, d), (0, 2, e)],
        name="Diamond",
    )


def theta_graph(k1: int, k2: int, k12: int, gamma: float, gamma_e: float) -> WeightedGraph:
    r"""
    Return the general two-cycle graph with one distinguished shared edge.

    Two branch vertices :math:`s = 0` and :math:`t = 1` are joined by three
    internally disjoint paths with :math:`k_1`, :math:`k_2` and
    :math:`k_{12}` edges. The two basic cycles share the third path. Every
    edge has weight ``gamma`` except the first edge of the shared path,
    which has weight ``gamma_e``.

    Edges are stored path by path: first path, second path, then the shared
    path with the distinguished edge first.

    Parameters
    ----------
    k1, k2, k12 : int
        Path lengths, each at least 1; at most one may equal 1.
    gamma : float
        Common weight.
    gamma_e : float
        Weight of the distinguished edge on the shared path.

    Returns
    -------
    WeightedGraph

    Examples
    --------
    >>> from cyclecalc.graphs.generators import theta_graph
    >>> G = theta_graph(2, 2, 1, 1.0, -0.5)
    >>> G.n_vertices, G.n_edges
    (4, 5)
    """
    lengths = (int(k1), int(k2), int(k12))
    if min(lengths) < 1:
        raise ValueError(f"Path lengths must be at least 1, got {lengths}.")
    if sum(k == 1 for k in lengths) > 1:
        raise ValueError("At most one path may be a single edge in a simple graph.")

    edges = []
    next_free = 2
    for which, k in enumerate(lengths):
        verts = _path_vertices(0, 1, k, next_free)
        next_free += k - 1
        for pos, (u, v) in enumerate(nx.utils.pairwise(verts)):
            w = gamma_e if (which == 2 and pos == 0) else gamma
            edges.append((u, v, w))
    return WeightedGraph(next_free, edges, name=f"Theta({k1},{k2},{k12})")


def joined_triangles(
    first: Weights = 1.0,
    second: Weights = 1.0,
    bridge: float = 1.0,
    path_length: int = 1,
) -> WeightedGraph:
    r"""
    Return two triangles joined by a path.

    The first triangle is on :math:`0, 1, 2`, the second on the last three
    vertices, and a path of ``path_length`` edges joins vertex 2 to the first
    vertex of the second triangle. Edge order: first triangle, path, second
    triangle, each triangle in the order of :func:`triangle_graph`.

    Parameters
    ----------
    first, second : float or sequence of three floats
        Triangle weights.
    bridge : float
        Weight of every path edge.
    path_length : int
        Number of path edges, at least 1.
    """
    if path_length < 1:
        raise ValueError(f"path_length must be at least 1, got {path_length}.")
    w1 = _edge_weights(first, 3)
    w2 = _edge_weights(second, 3)
    x = 2 + path_length
    edges = [(0, 1, w1[0]), (1, 2, w1[1]), (0, 2, w1[2])]
    edges += [(u, v, bridge) for u, v in nx.utils.pairwise(range(2, x + 1))]
    edges += [(x, x + 1, w2[0]), (x + 1, x + 2, w2[1]), (x, x + 2, w2[2])]
    return WeightedGraph(x + 3, edges, name="Joined triangles")
