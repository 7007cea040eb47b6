# src/cyclecalc/config.py
r"""
Numerical defaults for CycleCalc, with environment overrides.

Environment overrides
---------------------
- ``CYCLECALC_INERTIA_TOL``:
    Relative threshold used to call an eigenvalue zero (default ``1e-9``).
- ``CYCLECALC_WEIGHT_EPS``:
    Smallest admissible edge-weight magnitude (default ``1e-12``).
- ``CYCLECALC_RESIDUAL_TOL``:
    Fixed-point residual tolerance for Kuramoto classification (default ``1e-8``).
- ``CYCLECALC_SYMMETRY_TOL``:
    Largest tolerated asymmetry, relative to the largest entry (default ``1e-10``).
- ``CYCLECALC_EIGENSOLVER``:
    ``"jacobi"`` (default) for the cyclic Jacobi solver, or ``"lapack"`` for
    :func:`numpy.linalg.eigvalsh`.
- ``CYCLECALC_LOG_LEVEL``:
    Level used by the command-line interface (default ``"WARNING"``).
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

__all__ = [
    "Settings",
    "get_settings",
    "resolve_tol",
    "EIGENSOLVERS",
]

EIGENSOLVERS = ("jacobi", "lapack")

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    r"""
    Numerical settings shared by the spectral, oracle and Kuramoto layers.

    Parameters
    ----------
    inertia_tol : float
        Relative zero threshold for eigenvalue sign counts.
    weight_eps : float
        Minimum absolute edge weight; smaller weights are rejected.
    residual_tol : float
        Maximum fixed-point residual accepted by classification.
    symmetry_tol : float
        Relative asymmetry tolerated before a matrix is rejected.
    eigensolver : {"jacobi", "lapack"}
        Backend used by :func:`cyclecalc.spectral.inertia`.
    log_level : str
        Logging level name for the command-line interface.
    """
    inertia_tol: float = 1e-9
    weight_eps: float = 1e-12
    residual_tol: float = 1e-8
    symmetry_tol: float = 1e-10
    eigensolver: str = "jacobi"
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        for name in ("inertia_tol", "weight_eps", "residual_tol", "symmetry_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}.")
        if self.eigensolver not in EIGENSOLVERS:
            raise ValueError(
                f"eigensolver must be one of {EIGENSOLVERS}, got {self.eigensolver!r}."
            )
        if self.log_level.upper() not in _LOG_LEVELS:
            raise ValueError(f"log_level must be one of {_LOG_LEVELS}, got {self.log_level!r}.")

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level.upper())

    def with_overrides(self, **changes) -> "Settings":
        """Return a copy with the non-``None`` entries of ``changes`` applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _float_from_env(var: str, default: float) -> float:
    raw = os.getenv(var, "").strip()
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{var} must be a number, got {raw!r}.") from None


def get_settings() -> Settings:
    r"""
    Return the active settings, honoring environment overrides.

    The environment is read on every call so tests and the CLI can change
    variables at runtime.

    Returns
    -------
    Settings
        Defaults updated from the ``CYCLECALC_*`` variables.

    Raises
    ------
    ValueError
        If a variable is set to an unparsable or out-of-range value.

    Examples
    --------
    >>> from cyclecalc.config import get_settings
    >>> get_settings().weight_eps
    1e-12
    """
    defaults = Settings()
    try:
        return Settings(
            inertia_tol=_float_from_env("CYCLECALC_INERTIA_TOL", defaults.inertia_tol),
            weight_eps=_float_from_env("CYCLECALC_WEIGHT_EPS", defaults.weight_eps),
            residual_tol=_float_from_env("CYCLECALC_RESIDUAL_TOL", defaults.residual_tol),
            symmetry_tol=_float_from_env("CYCLECALC_SYMMETRY_TOL", defaults.symmetry_tol),
            eigensolver=os.getenv("CYCLECALC_EIGENSOLVER", "").strip().lower() or defaults.eigensolver,
            log_level=os.getenv("CYCLECALC_LOG_LEVEL", "").strip().upper() or defaults.log_level,
        )
    except ValueError as exc:
        raise ValueError(f"Invalid CYCLECALC_* environment setting: {exc}") from None


def resolve_tol(value: Optional[float], name: str) -> float:
    """Return ``value`` or, when it is ``None``, the named field of the active settings."""
    if value is not None:
        return float(value)
    return float(getattr(get_settings(), name))
