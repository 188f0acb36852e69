"""Lowest Robin eigenvalue in exterior domains: disks, balls, convex curves."""

from .errors import DomainError, NotStrictlyConvexError, SolverError

__all__ = ["DomainError", "NotStrictlyConvexError", "SolverError"]
__version__ = "0.1.0"
