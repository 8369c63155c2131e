# Large Gap Bounds
"""Lower bounds for h(c) at large c and the thresholds where they cross 1."""
import math
from typing import Optional, Tuple

from gapbound.config import Config
from gapbound.errors import BracketError, DomainError
from gapbound.models import LargeGapVariant, QuadratureSpec
from gapbound.special_functions import abs_sinc_integral, sinc_squared_integral
from utils.run_logger import RunLogger

DEFAULT_BRACKETS = {
    LargeGapVariant.V1: (4.0, 7.0),
    LargeGapVariant.V2: (3.0, 5.0),
}


def h_lower(c: float, variant: LargeGapVariant, spec: Optional[QuadratureSpec] = None) -> float:
    """c - 2 sqrt((c/pi) I(c)) for the integral I selected by the variant.

    v1: I(c) = integral over [0, 1] of |sin(pi c v)| / v
    v2: I(c) = integral over [0, pi c] of (sin v / v)^2
    """
    if not (math.isfinite(c) and c > 0.0):
        raise DomainError(f"c must be positive, got {c}")
    variant = LargeGapVariant(variant)
    if variant is LargeGapVariant.V1:
        integral = abs_sinc_integral(c, spec)
    else:
        integral = sinc_squared_integral(math.pi * c, spec)
    return c - 2.0 * math.sqrt(c / math.pi * integral)


def find_large_gap_threshold(
    variant: LargeGapVariant,
    bracket: Optional[Tuple[float, float]] = None,
    tol: Optional[float] = None,
    spec: Optional[QuadratureSpec] = None,
    logger: Optional[RunLogger] = None,
) -> float:
    """Bisect for h_lower(c) = 1 inside the bracket.

    Returns the high end of the final bracket, where h_lower > 1 holds.

    Raises:
        BracketError: h_lower - 1 does not change sign over the bracket.
    """
    variant = LargeGapVariant(variant)
    low, high = bracket or DEFAULT_BRACKETS[variant]
    tol = Config.TOL_THRESHOLD if tol is None else tol
    if not 0.0 < low < high:
        raise DomainError(f"bracket must satisfy 0 < low < high, got ({low}, {high})")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")

    at_low = h_lower(low, variant, spec) - 1.0
    at_high = h_lower(high, variant, spec) - 1.0
    if not (at_low < 0.0 < at_high):
        raise BracketError(
            f"h_lower - 1 does not change sign over [{low}, {high}] for {variant.value}",
            low_value=at_low + 1.0,
            high_value=at_high + 1.0,
        )

    while high - low > tol:
        mid = 0.5 * (low + high)
        if h_lower(mid, variant, spec) > 1.0:
            high = mid
        else:
            low = mid
    if logger:
        logger.log_stage("threshold", {"variant": variant.value, "low": low, "high": high})
    return high
