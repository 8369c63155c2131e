# Error Types
"""Exception hierarchy for numerical failures and invalid inputs."""
from typing import Optional


class GapBoundError(Exception):
    """Base class for every error raised by the library."""


class DomainError(GapBoundError, ValueError):
    """An argument lies outside the domain of an operation."""


class ConvergenceError(GapBoundError):
    """A numerical method stopped before reaching its tolerance."""

    def __init__(self, message: str, estimate: Optional[float] = None):
        super().__init__(message)
        self.estimate = estimate


class CaseError(GapBoundError):
    """The requested computation belongs to the other case of the bound (beta > 1/2)."""


class BracketError(GapBoundError):
    """A root or threshold bracket does not straddle the target."""

    def __init__(self, message: str, low_value: Optional[float] = None, high_value: Optional[float] = None):
        super().__init__(message)
        self.low_value = low_value
        self.high_value = high_value


class MonotonicityError(GapBoundError):
    """A bisection trace is inconsistent with a monotone predicate."""


class AuditError(GapBoundError):
    """An exact inequality of the prime-sum chain was violated."""

    def __init__(self, message: str, link: str):
        super().__init__(message)
        self.link = link
