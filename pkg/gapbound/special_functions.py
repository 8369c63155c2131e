# Special Functions
"""Scalar kernels: sinc, the sine integral and the two large-gap integrals.

Removable singularities are resolved with their limit values; nothing here
ever evaluates 0/0.
"""
import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from gapbound.errors import ConvergenceError, DomainError
from gapbound.models import QuadratureSpec

SERIES_CROSSOVER = 2.0
SERIES_TERMS = 12

# Si(x)/x as a polynomial in x**2: (-1)^n / ((2n + 1) (2n + 1)!)
SI_SERIES = np.array(
    [(-1) ** n / ((2 * n + 1) * math.factorial(2 * n + 1)) for n in range(SERIES_TERMS)]
)


def _check_finite(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x


def sinc(x: float) -> float:
    """Unnormalized sinc, sin(x)/x, with sinc(0) = 1."""
    x = _check_finite(x)
    if x == 0.0:
        return 1.0
    return math.sin(x) / x


def sinc_array(x) -> np.ndarray:
    """Vectorized sinc for grid evaluation."""
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    nonzero = x != 0.0
    out[nonzero] = np.sin(x[nonzero]) / x[nonzero]
    return out


def _si_series(x):
    return x * np.polynomial.polynomial.polyval(x * x, SI_SERIES)


def integrate_pieces(
    func: Callable[..., float],
    points: Sequence[float],
    spec: QuadratureSpec,
    args: Tuple = (),
) -> Tuple[float, float]:
    """Integrate func over consecutive breakpoints and sum the pieces in order.

    Args:
        func: Integrand, smooth on each piece
        points: Increasing breakpoints; each adjacent pair is one piece
        spec: Tolerance contract
        args: Extra arguments passed to func

    Returns:
        (value, error_estimate)

    Raises:
        ConvergenceError: A piece did not converge within spec.max_depth
            subintervals, or the accumulated estimate exceeds the tolerance.
    """
    total = 0.0
    error = 0.0
    for a, b in zip(points[:-1], points[1:]):
        if b <= a:
            continue
        result = integrate.quad(
            func,
            a,
            b,
            args=args,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=spec.max_depth,
            full_output=1,
        )
        value, estimate = result[0], result[1]
        error += estimate
        if len(result) > 3:
            raise ConvergenceError(
                f"quadrature on [{a}, {b}] did not converge: {result[3]}", estimate=error
            )
        total += value
    if error > spec.abs_tol + spec.rel_tol * abs(total):
        raise ConvergenceError(
            f"accumulated error {error:.3e} exceeds tolerance {spec.abs_tol:.3e}", estimate=error
        )
    return total, error


def _pi_breakpoints(start: float, stop: float) -> list:
    """start, every multiple of pi strictly inside (start, stop), stop."""
    points = [start]
    k = math.floor(start / math.pi) + 1
    while k * math.pi < stop:
        points.append(k * math.pi)
        k += 1
    points.append(stop)
    return points


def sine_integral(x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """Si(x) = integral of sinc over [0, x] for x >= 0.

    Uses the Maclaurin series up to x = 2 (truncation below 1e-19 there) and
    continues with adaptive quadrature between multiples of pi beyond it.
    """
    x = _check_finite(x)
    if x < 0.0:
        raise DomainError(f"sine_integral needs x >= 0, got {x}")
    if x <= SERIES_CROSSOVER:
        return float(_si_series(x))
    spec = spec or QuadratureSpec.default()
    tail, _ = integrate_pieces(sinc, _pi_breakpoints(SERIES_CROSSOVER, x), spec)
    return float(_si_series(SERIES_CROSSOVER)) + tail


def sine_integral_array(x, spec: Optional[QuadratureSpec] = None) -> np.ndarray:
    """Vectorized Si; the series branch shares its coefficients with sine_integral."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0) or not np.all(np.isfinite(x)):
        raise DomainError("sine_integral_array needs finite x >= 0")
    out = np.empty_like(x)
    small = x <= SERIES_CROSSOVER
    out[small] = _si_series(x[small])
    for index in np.flatnonzero(~small):
        out[index] = sine_integral(x[index], spec)
    return out


def _abs_sinc_integrand(v: float, c: float) -> float:
    if v == 0.0:
        return math.pi * c
    return abs(math.sin(math.pi * c * v)) / v


def abs_sinc_integral(c: float, spec: Optional[QuadratureSpec] = None) -> float:
    """Integral of |sin(pi c v)| / v over v in [0, 1].

    The integrand has kinks at v = k/c for every integer 0 < k < c; those are
    the piece boundaries. Without a kink (c <= 1) the absolute value is inert
    and the integral is Si(pi c).
    """
    c = _check_finite(c, "c")
    if c <= 0.0:
        raise DomainError(f"abs_sinc_integral needs c > 0, got {c}")
    if c <= 1.0:
        return sine_integral(math.pi * c, spec)
    spec = spec or QuadratureSpec.default()
    points = [0.0] + [k / c for k in range(1, math.ceil(c)) if k < c] + [1.0]
    value, _ = integrate_pieces(_abs_sinc_integrand, points, spec, args=(c,))
    return value


def _sinc_squared(v: float) -> float:
    s = sinc(v)
    return s * s


def sinc_squared_integral(x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """Integral of (sin v / v)^2 over [0, x]; nondecreasing, below pi/2."""
    x = _check_finite(x)
    if x < 0.0:
        raise DomainError(f"sinc_squared_integral needs x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    spec = spec or QuadratureSpec.default()
    value, _ = integrate_pieces(_sinc_squared, _pi_breakpoints(0.0, x), spec)
    return value
