# src/cyclecalc/kuramoto/ring.py
r"""
Stable fixed points of the Kuramoto ring with one long link.

On the ring :math:`R_n` with unit coupling, the configuration
:math:`\theta_k = k\zeta` is a fixed point once the end oscillators are
forced by :math:`\omega_{n-1} = -\omega_0 = \sin((n-1)\zeta) + \sin\zeta`.
Its consecutive links have Jacobian weight :math:`\cos\zeta` and the
closing link :math:`\cos((n-1)\zeta)`. On the branch :math:`\cos\zeta > 0`
the fixed point is stable iff

.. math::
    h_n(\zeta) = (n-1)\frac{\cos((n-1)\zeta)}{\cos\zeta} + 1 > 0,

and the first root :math:`\zeta^*` of :math:`h_n` gives the longest
possible stable link, of length :math:`n\zeta^*` modulo :math:`2\pi`.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from functools import partial
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy.optimize import bisect

from cyclecalc.exceptions import NoRootError, PoleError
from cyclecalc.graphs.generators.simple_graphs import ring_graph
from cyclecalc.kuramoto.fixed_points import PhaseConfiguration
from cyclecalc.metadata import quantity_metadata

__all__ = [
    "RingAnalysis",
    "EqualGapCheck",
    "POLE_EPS",
    "TABLE_SIZES",
    "h_n",
    "omega_profile",
    "twisted_state",
    "ring_roots",
    "longest_stable_link",
    "ring_table",
    "ring_scan",
    "reciprocal_cosine_sum",
    "equal_gap_deficit",
]

logger = logging.getLogger(__name__)

POLE_EPS = 1e-12
TABLE_SIZES = (3, 4, 5, 10, 20, 30, 40, 50)


def _check_size(n: int) -> int:
    n = int(n)
    if n < 3:
        raise ValueError(f"The ring analysis needs n >= 3, got {n}.")
    return n


@quantity_metadata(
    display_name="Ring stability function",
    notation=r"h_n(\zeta) = (n-1)\cos((n-1)\zeta)/\cos\zeta + 1",
    category="kuramoto",
)
def h_n(n: int, zeta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    r"""
    Evaluate the ring stability function.

    Definition
    ----------
    :math:`h_n(\zeta) = (n-1)\cos((n-1)\zeta)/\cos\zeta + 1`. For
    :math:`\cos\zeta > 0`, :math:`\theta_k = k\zeta` is a stable fixed point
    of the forced ring iff :math:`h_n(\zeta) > 0`.

    Parameters
    ----------
    n : int
        Ring size, at least 3.
    zeta : float or numpy.ndarray
        Gap between consecutive phases, in radians.

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    PoleError
        If :math:`|\cos\zeta| < 10^{-12}` at any input point.

    Examples
    --------
    >>> import numpy as np
    >>> from cyclecalc.kuramoto import h_n
    >>> h_n(5, 0.0)
    5.0
    >>> round(h_n(3, np.pi / 4), 12)
    1.0
    """
    n = _check_size(n)
    z = np.asarray(zeta, dtype=float)
    c = np.cos(z)
    if np.any(np.abs(c) < POLE_EPS):
        raise PoleError(f"h_{n} has a pole where cos(zeta) = 0.")
    value = (n - 1) * np.cos((n - 1) * z) / c + 1.0
    return float(value) if value.ndim == 0 else value


def omega_profile(n: int, zeta: float) -> np.ndarray:
    r"""
    Natural frequencies making :math:`\theta_k = k\zeta` a fixed point of the ring.

    Returns
    -------
    numpy.ndarray
        :math:`\omega_k = 0` for :math:`0 < k < n-1`,
        :math:`\omega_{n-1} = \sin((n-1)\zeta) + \sin\zeta` and
        :math:`\omega_0 = -\omega_{n-1}`.
    """
    n = _check_size(n)
    omega = np.zeros(n)
    omega[-1] = np.sin((n - 1) * zeta) + np.sin(zeta)
    omega[0] = -omega[-1]
    return omega


def twisted_state(n: int, zeta: float, coupling: float = 1.0) -> PhaseConfiguration:
    r"""
    The forced ring configuration :math:`\theta_k = k\zeta` with uniform coupling.

    Examples
    --------
    >>> import numpy as np
    >>> from cyclecalc.kuramoto import fixed_point_residual, twisted_state
    >>> bool(np.allclose(fixed_point_residual(twisted_state(6, 0.4)), 0.0))
    True
    """
    n = _check_size(n)
    if coupling <= 0:
        raise ValueError(f"coupling must be positive, got {coupling}.")
    theta = zeta * np.arange(n, dtype=float)
    omega = coupling * omega_profile(n, zeta)
    return PhaseConfiguration(theta, omega, ring_graph(n, coupling))


def _wrapped_link(n: int, zeta: float) -> float:
    """Distance of :math:`n\\zeta` from the nearest multiple of :math:`2\\pi`, over :math:`2\\pi`."""
    x = np.mod(n * zeta, 2 * np.pi) / (2 * np.pi)
    return float(min(x, 1.0 - x))


def _is_long(n: int, zeta: float) -> bool:
    x = np.mod(n * zeta, 2 * np.pi)
    return bool(np.pi / 2 < x < 3 * np.pi / 2)


def ring_roots(n: int, *, step: Optional[float] = None, xtol: float = 1e-12) -> Tuple[float, ...]:
    r"""
    All roots of :math:`h_n` in :math:`(0, \pi/2)`, in increasing order.

    The interval is sampled with ``step`` (default
    :math:`\pi/(2\cdot 10^4 (n-1))`), and every sign change is refined by
    bisection to a bracket narrower than ``xtol``.
    """
    n = _check_size(n)
    if step is None:
        step = np.pi / (2 * 1e4 * (n - 1))
    grid = step * np.arange(1, int(np.ceil(np.pi / (2 * step))))
    grid = grid[np.cos(grid) >= POLE_EPS]
    values = h_n(n, grid)

    roots = []
    f = partial(h_n, n)
    exact = np.flatnonzero(values == 0.0)
    roots.extend(float(grid[i]) for i in exact)
    crossings = np.flatnonzero(values[:-1] * values[1:] < 0)
    for i in crossings:
        a, b = float(grid[i]), float(grid[i + 1])
        logger.debug("Bisecting h_%d on [%.15g, %.15g].", n, a, b)
        roots.append(float(bisect(f, a, b, xtol=xtol)))
    return tuple(sorted(roots))


@dataclass(frozen=True)
class RingAnalysis:
    r"""
    Longest stable link on the ring :math:`R_n`.

    Parameters
    ----------
    n : int
        Ring size.
    zeta_star : float
        First positive root of :math:`h_n`.
    normalized_link : float
        :math:`n\zeta^*/(2\pi)`.
    omega_wrap : float
        :math:`\omega_{n-1}(\zeta^*)`.
    is_long : bool
        Whether :math:`n\zeta^* \bmod 2\pi` lies in :math:`(\pi/2, 3\pi/2)`.
    roots : tuple of float
        Every root of :math:`h_n` found in :math:`(0, \pi/2)`.
    """
    n: int
    zeta_star: float
    normalized_link: float
    omega_wrap: float
    is_long: bool
    roots: Tuple[float, ...] = ()

    def to_dict(self) -> dict:
        data = asdict(self)
        data["roots"] = list(self.roots)
        return data


@quantity_metadata(
    display_name="Longest stable link",
    notation=r"n\zeta^*/2\pi",
    category="kuramoto",
)
def longest_stable_link(n: int) -> RingAnalysis:
    r"""
    Locate the longest stable link on the ring :math:`R_n`.

    Definition
    ----------
    :math:`\zeta^*` is the first root of :math:`h_n` in :math:`(0, \pi/2)`;
    the link closing the ring then has length :math:`n\zeta^*` modulo
    :math:`2\pi`, reported as the fraction :math:`n\zeta^*/2\pi` of a turn.

    Returns
    -------
    RingAnalysis

    Raises
    ------
    NoRootError
        If :math:`h_n` has no sign change in :math:`(0, \pi/2)`.

    Examples
    --------
    >>> from cyclecalc.kuramoto import longest_stable_link
    >>> round(longest_stable_link(10).normalized_link, 3)
    0.297
    """
    n = _check_size(n)
    roots = ring_roots(n)
    if not roots:
        raise NoRootError(f"h_{n} has no root in (0, pi/2).")
    zeta = roots[0]

    first = _wrapped_link(n, zeta)
    for other in roots[1:]:
        if _is_long(n, other) and _wrapped_link(n, other) > first + 1e-12:
            logger.warning(
                "For n = %d the root %.12g gives a longer link (%.6f) than the first root (%.6f).",
                n, other, _wrapped_link(n, other), first,
            )

    return RingAnalysis(
        n=n,
        zeta_star=zeta,
        normalized_link=n * zeta / (2 * np.pi),
        omega_wrap=float(omega_profile(n, zeta)[-1]),
        is_long=_is_long(n, zeta),
        roots=roots,
    )


def ring_table(n_values: Iterable[int] = TABLE_SIZES) -> pd.DataFrame:
    """
    Tabulate :func:`longest_stable_link` over ring sizes.

    Returns
    -------
    pandas.DataFrame
        Columns ``n``, ``zeta_star``, ``normalized_link``, ``omega_wrap``,
        ``is_long``; one row per ring size.
    """
    rows = []
    for n in n_values:
        rows.append({k: v for k, v in longest_stable_link(n).to_dict().items() if k != "roots"})
    return pd.DataFrame(rows, columns=["n", "zeta_star", "normalized_link", "omega_wrap", "is_long"])


def ring_scan(
    n: int,
    start: float = 0.0,
    stop: float = np.pi / 2,
    steps: int = 1000,
) -> pd.DataFrame:
    r"""
    Sample the ring curves on a :math:`\zeta` grid.

    Parameters
    ----------
    n : int
        Ring size.
    start, stop : float
        The grid covers ``[start, stop)``.
    steps : int
        Number of grid points.

    Returns
    -------
    pandas.DataFrame
        Columns ``zeta``, ``h_n``, ``omega_wrap``
        (:math:`\sin((n-1)\zeta) + \sin\zeta`), ``cos_wrap``
        (:math:`\cos((n-1)\zeta)`) and ``pole``. At a pole of :math:`h_n`
        the ``pole`` flag is set and ``h_n`` is NaN.

    Examples
    --------
    >>> from cyclecalc.kuramoto import ring_scan
    >>> float(ring_scan(9, steps=4)["h_n"].iloc[0])
    9.0
    """
    n = _check_size(n)
    if steps < 1 or stop <= start:
        raise ValueError("Need steps >= 1 and stop > start.")
    zeta = np.linspace(start, stop, int(steps), endpoint=False)
    pole = np.abs(np.cos(zeta)) < POLE_EPS
    h = np.full(zeta.shape, np.nan)
    h[~pole] = h_n(n, zeta[~pole])
    if np.any(pole):
        logger.warning("Flagged %d grid points at a pole of h_%d.", int(pole.sum()), n)
    return pd.DataFrame(
        {
            "zeta": zeta,
            "h_n": h,
            "omega_wrap": np.sin((n - 1) * zeta) + np.sin(zeta),
            "cos_wrap": np.cos((n - 1) * zeta),
            "pole": pole,
        }
    )


def reciprocal_cosine_sum(gaps: Sequence[float]) -> float:
    r""":math:`\sum_i 1/\cos\zeta_i`."""
    gaps = np.asarray(gaps, dtype=float)
    c = np.cos(gaps)
    if np.any(np.abs(c) < POLE_EPS):
        raise PoleError("A gap sits at a pole of the secant.")
    return float(np.sum(1.0 / c))


class EqualGapCheck(NamedTuple):
    equal_value: float
    min_deficit: float
    samples_used: int


def equal_gap_deficit(
    n: int,
    eta: float,
    samples: int = 10_000,
    seed: Optional[int] = None,
    scale: float = 0.1,
) -> EqualGapCheck:
    r"""
    Compare :math:`\sum_i 1/\cos\zeta_i` at equal gaps with random perturbations.

    The :math:`n-1` short gaps of the ring are constrained by
    :math:`\sum_i \zeta_i = \eta`. Perturbations keep the sum and every
    :math:`|\zeta_i| < \pi/2`; ``min_deficit`` is the smallest observed
    value of :math:`f(\zeta) - f(\eta/(n-1), \dots)` and is nonnegative when
    the equal split minimizes :math:`f`.

    Raises
    ------
    ValueError
        If the equal split itself leaves the branch :math:`|\zeta| < \pi/2`.
    """
    n = _check_size(n)
    k = n - 1
    equal = eta / k
    if abs(equal) >= np.pi / 2:
        raise ValueError(f"Equal gaps eta/(n-1) = {equal:.6g} leave (-pi/2, pi/2).")
    base = reciprocal_cosine_sum(np.full(k, equal))

    rng = np.random.default_rng(seed)
    delta = rng.normal(scale=scale, size=(samples, k))
    delta -= delta.mean(axis=1, keepdims=True)
    gaps = equal + delta
    gaps = gaps[np.all(np.abs(gaps) < np.pi / 2 - 1e-6, axis=1)]
    if gaps.shape[0] == 0:
        return EqualGapCheck(base, float("inf"), 0)
    values = np.sum(1.0 / np.cos(gaps), axis=1)
    return EqualGapCheck(base, float(np.min(values) - base), int(gaps.shape[0]))
