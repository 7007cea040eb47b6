# src/cyclecalc/graphs/core/basics.py
"""
Weighted graphs with signed edge weights, and their text/JSON readers.
"""

from __future__ import annotations

import json
import logging
import math
import os
from dataclasses import InitVar, dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from cyclecalc.config import resolve_tol
from cyclecalc.exceptions import (
    DegenerateWeightError,
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
)

__all__ = [
    "Edge",
    "WeightedGraph",
    "load_graph",
    "read_graph",
    "write_edge_list",
]

logger = logging.getLogger(__name__)

GraphSource = Union[str, os.PathLike, Mapping[str, Any]]


class Edge(NamedTuple):
    """An oriented edge ``tail -> head`` with a signed weight; always ``tail < head``."""
    tail: int
    head: int
    weight: float


@dataclass(frozen=True)
class WeightedGraph:
    r"""
    A simple undirected graph with signed real edge weights.

    Vertices are the integers :math:`0, \dots, N-1`. Each edge is stored once,
    oriented from the smaller to the larger endpoint, and the position of an
    edge in :attr:`edges` is its index in every edge-indexed vector or matrix
    (incidence columns, cycle vectors, weight diagonals).

    Parameters
    ----------
    n_vertices : int
        Number of vertices :math:`N`.
    edges : sequence of Edge or (u, v, weight) triples
        The edge list. Endpoints are reoriented so that ``tail < head``.
    labels : tuple of int, optional
        Original vertex ids when the graph was read from a file, indexed by
        compact vertex id.
    name : str, optional
        An optional name for the graph.
    weight_eps : float, optional
        Smallest admissible weight magnitude. Defaults to the
        ``weight_eps`` setting (``1e-12``).

    Raises
    ------
    SelfLoopError
        If an edge joins a vertex to itself.
    DuplicateEdgeError
        If two edges join the same pair of vertices.
    DegenerateWeightError
        If some :math:`|\gamma_e| <` ``weight_eps``.
    ValueError
        If an endpoint lies outside ``range(n_vertices)``.

    Examples
    --------
    >>> from cyclecalc.graphs.core import WeightedGraph
    >>> G = WeightedGraph(3, [(0, 1, 1.0), (2, 1, 1.0), (0, 2, -0.4)])
    >>> G.edges[1]
    Edge(tail=1, head=2, weight=1.0)
    >>> G.negative_edges
    (2,)
    """
    n_vertices: int
    edges: Tuple[Edge, ...]
    labels: Optional[Tuple[int, ...]] = None
    name: Optional[str] = None
    weight_eps: InitVar[Optional[float]] = None

    _adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )
    _pair_index: Dict[Tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self, weight_eps: Optional[float]) -> None:
        eps = resolve_tol(weight_eps, "weight_eps")
        n = int(self.n_vertices)
        if n < 0:
            raise ValueError(f"n_vertices must be nonnegative, got {n}.")

        canonical = []
        pair_index: Dict[Tuple[int, int], int] = {}
        for idx, raw in enumerate(self.edges):
            u, v, w = raw
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise SelfLoopError(f"Edge {idx} is a self-loop at vertex {u}.")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge {idx} = ({u}, {v}) has an endpoint outside 0..{n - 1}.")
            if not math.isfinite(w):
                raise DegenerateWeightError(f"Edge {idx} = ({u}, {v}) has non-finite weight {w}.")
            if abs(w) < eps:
                raise DegenerateWeightError(
                    f"Edge {idx} = ({u}, {v}) has weight {w!r} with magnitude below {eps:g}."
                )
            tail, head = (u, v) if u < v else (v, u)
            if (tail, head) in pair_index:
                raise DuplicateEdgeError(
                    f"Edge {idx} duplicates edge {pair_index[(tail, head)]} on pair ({tail}, {head})."
                )
            pair_index[(tail, head)] = idx
            canonical.append(Edge(tail, head, w))

        adjacency = [[] for _ in range(n)]
        for idx, e in enumerate(canonical):
            adjacency[e.tail].append((e.head, idx))
            adjacency[e.head].append((e.tail, idx))

        object.__setattr__(self, "n_vertices", n)
        object.__setattr__(self, "edges", tuple(canonical))
        if self.labels is not None:
            labels = tuple(int(x) for x in self.labels)
            if len(labels) != n:
                raise ValueError(f"Expected {n} labels, got {len(labels)}.")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_adjacency", tuple(tuple(sorted(a)) for a in adjacency))
        object.__setattr__(self, "_pair_index", pair_index)

    # ------------------------------------------------------------------
    # Basic structure
    # ------------------------------------------------------------------
    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def weights(self) -> np.ndarray:
        """Edge weights :math:`\\gamma_e` in edge order (a fresh array)."""
        return np.array([e.weight for e in self.edges], dtype=float)

    @property
    def negative_edges(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if e.weight < 0)

    @property
    def positive_edges(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if e.weight > 0)

    def neighbors(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """Pairs ``(neighbor, edge_index)`` of vertex ``v``, in ascending neighbor order."""
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge joining ``u`` and ``v``; raises ``KeyError`` if absent."""
        key = (u, v) if u < v else (v, u)
        return self._pair_index[key]

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._pair_index

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen :class:`networkx.Graph` view with ``weight`` and ``index`` edge attributes."""
        G = nx.Graph(name=self.name or "")
        G.add_nodes_from(range(self.n_vertices))
        for idx, e in enumerate(self.edges):
            G.add_edge(e.tail, e.head, weight=e.weight, index=idx)
        return nx.freeze(G)

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return False
        return nx.is_connected(self.nx_graph)

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------
    def with_weights(self, weights: Sequence[float], *, weight_eps: Optional[float] = None) -> "WeightedGraph":
        """Same vertices and edges in the same order, with new weights."""
        weights = list(weights)
        if len(weights) != self.n_edges:
            raise ValueError(f"Expected {self.n_edges} weights, got {len(weights)}.")
        return WeightedGraph(
            self.n_vertices,
            tuple((e.tail, e.head, w) for e, w in zip(self.edges, weights)),
            labels=self.labels,
            name=self.name,
            weight_eps=weight_eps,
        )

    def edge_subgraph(self, indices: Iterable[int]) -> "WeightedGraph":
        """Spanning subgraph on all vertices keeping the listed edges, in the given order."""
        return WeightedGraph(
            self.n_vertices,
            tuple(self.edges[i] for i in indices),
            labels=self.labels,
            weight_eps=0.0 if not self.edges else min(abs(e.weight) for e in self.edges),
        )

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------
    def to_edge_list_text(self) -> str:
        """Edge list in the ``tail head weight`` text format, using compact vertex ids."""
        lines = [f"{e.tail} {e.head} {e.weight!r}" for e in self.edges]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json_dict(self) -> Dict[str, Any]:
        return {"edges": [[e.tail, e.head, e.weight] for e in self.edges]}


# ----------------------------------------------------------------------
# Readers and writers
# ----------------------------------------------------------------------
def _parse_vertex(token: Any, where: str) -> int:
    if isinstance(token, bool):
        raise FormatError(f"{where}: vertex id must be an integer, got {token!r}.")
    if isinstance(token, int):
        value = token
    elif isinstance(token, str):
        try:
            value = int(token)
        except ValueError:
            raise FormatError(f"{where}: vertex id must be an integer, got {token!r}.") from None
    else:
        raise FormatError(f"{where}: vertex id must be an integer, got {token!r}.")
    if value < 0:
        raise FormatError(f"{where}: vertex id must be nonnegative, got {value}.")
    return value


def _parse_weight(token: Any, where: str) -> float:
    if isinstance(token, bool):
        raise FormatError(f"{where}: weight must be a number, got {token!r}.")
    try:
        value = float(token)
    except (TypeError, ValueError):
        raise FormatError(f"{where}: weight must be a number, got {token!r}.") from None
    if not math.isfinite(value):
        raise FormatError(f"{where}: weight must be finite, got {token!r}.")
    return value


def _records_from_text(text: str) -> list:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        where = f"line {lineno}"
        if len(tokens) != 3:
            raise FormatError(f"{where}: expected 'tail head weight', got {content!r}.")
        records.append((
            _parse_vertex(tokens[0], where),
            _parse_vertex(tokens[1], where),
            _parse_weight(tokens[2], where),
            where,
        ))
    return records


def _records_from_json(obj: Any) -> list:
    if not isinstance(obj, Mapping) or "edges" not in obj:
        raise FormatError('JSON graph input must be an object with an "edges" list.')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise FormatError('"edges" must be a list of [u, v, weight] triples.')
    records = []
    for i, item in enumerate(edges):
        where = f"edge {i}"
        if not isinstance(item, (list, tuple)) or len(item) != 3:
            raise FormatError(f"{where}: expected [u, v, weight], got {item!r}.")
        records.append((
            _parse_vertex(item[0], where),
            _parse_vertex(item[1], where),
            _parse_weight(item[2], where),
            where,
        ))
    return records


def load_graph(
    source: GraphSource,
    *,
    weight_eps: Optional[float] = None,
    name: Optional[str] = None,
) -> WeightedGraph:
    r"""
    Build a :class:`WeightedGraph` from an edge list.

    Two formats are accepted. The text format has one edge per line as
    ``tail head weight`` separated by whitespace, with ``#`` starting a
    comment. The JSON format is an object ``{"edges": [[u, v, w], ...]}``.
    Vertex ids are compacted to :math:`0, \dots, N-1` in order of first
    appearance; the original ids are kept in :attr:`WeightedGraph.labels`.

    Parameters
    ----------
    source : str, path-like or mapping
        A path to a file, the text or JSON content itself, or an already
        decoded JSON object.
    weight_eps : float, optional
        Smallest admissible weight magnitude (default ``1e-12``).
    name : str, optional
        Name for the graph; defaults to the file stem for path input.

    Returns
    -------
    WeightedGraph

    Raises
    ------
    FormatError
        If the input cannot be parsed or contains no edges.
    SelfLoopError, DuplicateEdgeError, DegenerateWeightError
        If the edge list violates the simple-graph or weight constraints.

    Examples
    --------
    >>> from cyclecalc.graphs.core import load_graph
    >>> G = load_graph("0 1 1.0\n1 2 1.0\n2 0 1.0")
    >>> G.n_vertices, G.n_edges
    (3, 3)
    >>> load_graph('{"edges": [[5, 7, -0.5]]}').labels
    (5, 7)
    """
    if isinstance(source, Mapping):
        records = _records_from_json(source)
    elif isinstance(source, os.PathLike):
        path = Path(source)
        name = name or path.stem
        return load_graph(path.read_text(encoding="utf-8"), weight_eps=weight_eps, name=name)
    elif isinstance(source, str):
        if source.lstrip().startswith("{"):
            try:
                obj = json.loads(source)
            except json.JSONDecodeError as exc:
                raise FormatError(f"Invalid JSON graph input: {exc}") from None
            records = _records_from_json(obj)
        else:
            records = _records_from_text(source)
    else:
        raise TypeError(f"Unsupported graph source type {type(source).__name__}.")

    if not records:
        raise FormatError("Graph input contains no edges.")

    compact: Dict[int, int] = {}
    edges = []
    for u, v, w, where in records:
        if u == v:
            raise SelfLoopError(f"{where}: self-loop at vertex {u}.")
        for x in (u, v):
            if x not in compact:
                compact[x] = len(compact)
        edges.append((compact[u], compact[v], w))

    labels = tuple(compact)
    g = WeightedGraph(len(labels), tuple(edges), labels=labels, name=name, weight_eps=weight_eps)
    logger.debug("Loaded graph %r with %d vertices and %d edges.", name, g.n_vertices, g.n_edges)
    return g


def read_graph(path: Union[str, os.PathLike], **kwargs) -> WeightedGraph:
    """Read a graph file in either supported format; see :func:`load_graph`."""
    return load_graph(Path(path), **kwargs)


def write_edge_list(g: WeightedGraph, path: Union[str, os.PathLike], *, fmt: str = "text") -> Path:
    r"""
    Write ``g`` as an edge-list text file or a JSON file.

    Parameters
    ----------
    g : WeightedGraph
        The graph to write.
    path : str or pathlib.Path
        Destination file path.
    fmt : {"text", "json"}
        Output format.

    Returns
    -------
    pathlib.Path
        The written path.
    """
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "text":
        out.write_text(g.to_edge_list_text(), encoding="utf-8")
    elif fmt == "json":
        with out.open("w", encoding="utf-8") as f:
            json.dump(g.to_json_dict(), f, indent=2, ensure_ascii=False)
    else:
        raise ValueError(f"fmt must be 'text' or 'json', got {fmt!r}.")
    return out
