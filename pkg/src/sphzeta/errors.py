"""Exception hierarchy shared across the package.

All numerical failure modes raise subclasses of :class:`SphzetaError`, so the
command-line layer can map them to a single exit code while tests can still
assert on the specific condition.
"""

__all__ = [
    "SphzetaError",
    "DomainError",
    "BracketError",
    "ConvergenceError",
    "BranchAmbiguityError",
]


class SphzetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SphzetaError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BracketError(SphzetaError):
    """A root could not be bracketed.

    Carries the searched interval so callers can report where the scan gave
    up instead of silently returning a wrong root.
    """

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class ConvergenceError(SphzetaError):
    """An iterative computation failed to reach its target tolerance.

    ``bound`` holds the achieved error estimate when one is available.
    """

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class BranchAmbiguityError(SphzetaError):
    """An eigenvalue branch could not be identified unambiguously."""
