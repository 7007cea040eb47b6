# src/cyclecalc/oracle/random_graphs.py
r"""
Seeded random generators for graphs and matrices used by property tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg as sla

from cyclecalc.exceptions import SpecError
from cyclecalc.graphs.core.basics import WeightedGraph

__all__ = [
    "RandomGraphSpec",
    "random_connected_graph",
    "random_tree",
    "random_graphs",
    "random_symmetric_matrix",
    "random_nonsingular_matrix",
    "random_singular_symmetric",
    "random_subspace",
]


@dataclass(frozen=True)
class RandomGraphSpec:
    r"""
    Parameters for :func:`random_connected_graph`.

    Parameters
    ----------
    vertices : (int, int)
        Inclusive range for the number of vertices.
    edges : (int, int), optional
        Inclusive range for the number of edges, intersected with the
        feasible range :math:`[N-1, N(N-1)/2]`. ``None`` means the whole
        feasible range.
    w_min, w_max : float
        Weight magnitudes are uniform on :math:`[w_{\min}, w_{\max}]`.
    negative_probability : float
        Probability that an edge weight is negative.
    seed : int, optional
        Seed for :func:`numpy.random.default_rng`.
    """
    vertices: Tuple[int, int] = (2, 10)
    edges: Optional[Tuple[int, int]] = (1, 20)
    w_min: float = 0.1
    w_max: float = 2.0
    negative_probability: float = 0.5
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        lo, hi = self.vertices
        if lo < 1 or lo > hi:
            raise SpecError(f"Invalid vertex range {self.vertices}.")
        if self.edges is not None and (self.edges[0] < 0 or self.edges[0] > self.edges[1]):
            raise SpecError(f"Invalid edge range {self.edges}.")
        if not 0 < self.w_min <= self.w_max:
            raise SpecError(f"Need 0 < w_min <= w_max, got ({self.w_min}, {self.w_max}).")
        if not 0.0 <= self.negative_probability <= 1.0:
            raise SpecError(f"negative_probability must lie in [0, 1], got {self.negative_probability}.")

    def edge_range(self, n: int) -> Tuple[int, int]:
        """Feasible edge-count range for ``n`` vertices; raises SpecError if empty."""
        lo, hi = max(n - 1, 0), n * (n - 1) // 2
        if self.edges is not None:
            lo, hi = max(lo, self.edges[0]), min(hi, self.edges[1])
        if lo > hi:
            raise SpecError(
                f"No connected simple graph on {n} vertices has an edge count in {self.edges}."
            )
        return lo, hi


def _weights(spec: RandomGraphSpec, m: int, rng: np.random.Generator) -> np.ndarray:
    magnitude = rng.uniform(spec.w_min, spec.w_max, size=m)
    negative = rng.random(m) < spec.negative_probability
    return np.where(negative, -magnitude, magnitude)


def random_connected_graph(
    spec: RandomGraphSpec = RandomGraphSpec(),
    rng: Optional[np.random.Generator] = None,
) -> WeightedGraph:
    r"""
    Draw a random connected simple graph with signed weights.

    A random spanning tree is built first, by attaching each vertex of a
    random permutation to a uniformly chosen earlier vertex; extra edges are
    then sampled without replacement from the remaining vertex pairs. The
    edge list is shuffled before weights are drawn.

    Parameters
    ----------
    spec : RandomGraphSpec
        Size and weight distribution.
    rng : numpy.random.Generator, optional
        Generator to draw from. Defaults to ``default_rng(spec.seed)``.

    Returns
    -------
    WeightedGraph

    Raises
    ------
    SpecError
        If no connected simple graph fits the requested sizes.

    Examples
    --------
    >>> from cyclecalc.oracle import RandomGraphSpec, random_connected_graph
    >>> spec = RandomGraphSpec(vertices=(6, 6), edges=(9, 9), seed=1)
    >>> G = random_connected_graph(spec)
    >>> G.n_edges - G.n_vertices + 1
    4
    """
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    n = int(rng.integers(spec.vertices[0], spec.vertices[1] + 1))
    lo, hi = spec.edge_range(n)
    m = int(rng.integers(lo, hi + 1))

    order = rng.permutation(n)
    pairs = set()
    for i in range(1, n):
        j = int(rng.integers(0, i))
        u, v = int(order[i]), int(order[j])
        pairs.add((min(u, v), max(u, v)))

    if m > len(pairs):
        candidates = [p for p in itertools.combinations(range(n), 2) if p not in pairs]
        chosen = rng.choice(len(candidates), size=m - len(pairs), replace=False)
        pairs.update(candidates[int(k)] for k in chosen)

    edge_list = sorted(pairs)
    edge_list = [edge_list[int(k)] for k in rng.permutation(len(edge_list))]
    w = _weights(spec, len(edge_list), rng)
    return WeightedGraph(n, [(u, v, float(x)) for (u, v), x in zip(edge_list, w)])


def random_tree(
    n: int,
    rng: Optional[np.random.Generator] = None,
    *,
    w_min: float = 0.1,
    w_max: float = 2.0,
    negative_probability: float = 0.5,
) -> WeightedGraph:
    """Random signed tree on ``n`` vertices; see :func:`random_connected_graph`."""
    spec = RandomGraphSpec(
        vertices=(n, n),
        edges=(n - 1, n - 1),
        w_min=w_min,
        w_max=w_max,
        negative_probability=negative_probability,
    )
    return random_connected_graph(spec, rng)


def random_graphs(spec: RandomGraphSpec, count: int) -> List[WeightedGraph]:
    """``count`` graphs drawn from one generator seeded with ``spec.seed``."""
    rng = np.random.default_rng(spec.seed)
    return [random_connected_graph(spec, rng) for _ in range(count)]


def random_symmetric_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    """Symmetric matrix with standard normal entries on and above the diagonal."""
    A = rng.standard_normal((n, n))
    return np.triu(A) + np.triu(A, 1).T


def random_nonsingular_matrix(
    n: int,
    rng: np.random.Generator,
    *,
    max_condition: float = 1e6,
    symmetric: bool = False,
) -> np.ndarray:
    """Random (optionally symmetric) matrix with condition number below ``max_condition``."""
    while True:
        A = random_symmetric_matrix(n, rng) if symmetric else rng.standard_normal((n, n))
        if n == 0 or np.linalg.cond(A) < max_condition:
            return A


def random_singular_symmetric(
    n: int,
    rng: np.random.Generator,
    *,
    max_condition: float = 1e6,
) -> Tuple[np.ndarray, np.ndarray]:
    r"""
    Random symmetric :math:`H` with a one-dimensional kernel spanned by a random :math:`x`.

    :math:`H = \Pi S \Pi` with :math:`\Pi` the orthogonal projector onto
    :math:`x^\perp` and :math:`S` random symmetric; draws are repeated until
    :math:`H` restricted to :math:`x^\perp` is well conditioned.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
        ``H`` and the kernel vector ``x``.
    """
    if n < 2:
        raise SpecError("A singular matrix with a one-dimensional kernel needs n >= 2.")
    while True:
        x = rng.standard_normal(n)
        P = sla.null_space(x[None, :])
        S = random_symmetric_matrix(n - 1, rng)
        if np.linalg.cond(S) < max_condition:
            H = P @ S @ P.T
            return 0.5 * (H + H.T), x


def random_subspace(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormal basis (``n x k``) of a random ``k``-dimensional subspace of :math:`\\mathbb{R}^n`."""
    if k == 0:
        return np.zeros((n, 0))
    return sla.orth(rng.standard_normal((n, k)))
