"""Exception types shared by the solvers and the CLI."""


class DomainError(ValueError):
    """Input outside the region where the requested quantity is defined."""


class NotStrictlyConvexError(DomainError):
    """Support function with a non-positive radius of curvature somewhere."""


class SolverError(RuntimeError):
    """A numerical method failed to converge or violated a proven bound."""
