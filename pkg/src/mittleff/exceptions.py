"""Exception types raised by the mittleff package."""

from __future__ import annotations


class MittleffError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MittleffError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(MittleffError, ZeroDivisionError):
    """Evaluation landed exactly on a pole."""


class ConvergenceError(MittleffError, RuntimeError):
    """An iterative procedure failed to converge within its budget."""


class ClusteredRootsError(MittleffError, RuntimeError):
    """Polynomial roots too close together to separate reliably."""


class SingularSystemError(MittleffError, RuntimeError):
    """A linear system is singular (or its null space is not one-dimensional)."""
