# src/cyclecalc/exceptions.py
"""
Exception hierarchy for CycleCalc.

Every failure raised by the package derives from :class:`CycleCalcError`.
Errors caused by bad input additionally derive from :class:`ValueError`, so
callers can keep catching the builtin type.
"""

from __future__ import annotations

__all__ = [
    "CycleCalcError",
    "FormatError",
    "DuplicateEdgeError",
    "SelfLoopError",
    "DegenerateWeightError",
    "NotConnectedError",
    "NotSymmetricError",
    "SingularCycleFormError",
    "DegenerateKernelError",
    "IdentityMismatchError",
    "PoleError",
    "NoRootError",
    "NotAFixedPointError",
    "SpecError",
    "ConvergenceError",
]


class CycleCalcError(Exception):
    """Base class for all CycleCalc errors."""


class FormatError(CycleCalcError, ValueError):
    """Raised when graph, phase or frequency input cannot be parsed."""


class DuplicateEdgeError(CycleCalcError, ValueError):
    """Raised when two edges join the same unordered vertex pair."""


class SelfLoopError(CycleCalcError, ValueError):
    """Raised when an edge joins a vertex to itself."""


class DegenerateWeightError(CycleCalcError, ValueError):
    """Raised when an edge weight is too close to zero to invert."""


class NotConnectedError(CycleCalcError, ValueError):
    """Raised when an operation requires a connected graph."""


class NotSymmetricError(CycleCalcError, ValueError):
    """Raised when a matrix expected to be symmetric is not."""


class SingularCycleFormError(CycleCalcError, ArithmeticError):
    """Raised when the cycle form has a vanishing determinant."""


class DegenerateKernelError(CycleCalcError, ArithmeticError):
    """Raised when a Laplacian has more than one zero eigenvalue."""


class IdentityMismatchError(CycleCalcError, ArithmeticError):
    """Raised when two computations of the same quantity disagree."""


class PoleError(CycleCalcError, ZeroDivisionError):
    """Raised when a ring indicator is evaluated where ``cos(zeta)`` vanishes."""


class NoRootError(CycleCalcError, RuntimeError):
    """Raised when a root search finds no sign change."""


class NotAFixedPointError(CycleCalcError, ValueError):
    """Raised when a phase configuration does not solve the fixed-point equations."""


class SpecError(CycleCalcError, ValueError):
    """Raised when a random-generation request cannot be satisfied."""


class ConvergenceError(CycleCalcError, RuntimeError):
    """Raised when an iterative eigensolver exhausts its sweep budget."""
