# Bound Core Module
"""The normalized envelope G, its critical point, and the searches over beta and c.

Throughout, phi = log(y/w) / log T with y = T^(1 - delta), so phi runs over
[0, 1 - delta] and w = y corresponds to phi = 0. In this variable

    G(phi) = 2 beta c (1 - delta - phi) + (2 alpha / pi) Si(pi c phi),
    dG/dphi = 2c (alpha sinc(pi c phi) - beta),

with alpha = 1/(4 beta). The O(1/log T) terms of the finite-T bound are not
part of G; the sieve oracle measures them.
"""
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from gapbound.config import Config
from gapbound.errors import BracketError, CaseError, DomainError, MonotonicityError
from gapbound.models import (
    BoundCase,
    BoundEvaluation,
    BoundParams,
    CriticalPoint,
    CTraceEntry,
    MaximizerKind,
    OptimizationResult,
    VerificationReport,
    make_params,
)
from gapbound.special_functions import sinc, sinc_array, sine_integral, sine_integral_array
from utils.run_logger import RunLogger

GOLDEN_RATIO = 2.0 / (1.0 + math.sqrt(5.0))
MAX_BISECTIONS = 200
# Slope differences within a few ulps of the slope scale count as ties
STRUCTURE_SLACK = 4.0 * np.finfo(float).eps


def g_kernel(t: float, c: float, logT: float) -> float:
    """Prime-power weight g(n) in the normalized variable t = log n / log T.

    Returns 2 sin(pi c t) / (pi t log T), with the limit 2c / log T at t = 0.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    if not 0.0 < c < 1.0:
        raise DomainError(f"c must lie in (0, 1), got {c}")
    if not logT > 0.0:
        raise DomainError(f"logT must be positive, got {logT}")
    if t == 0.0:
        return 2.0 * c / logT
    return 2.0 * math.sin(math.pi * c * t) / (math.pi * t * logT)


def g_kernel_array(t, c: float, logT: float) -> np.ndarray:
    """Vectorized g_kernel for prime-power sums."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise DomainError("t must lie in [0, 1]")
    return 2.0 * c * sinc_array(math.pi * c * t) / logT


def _check_phi(phi: float, params: BoundParams) -> None:
    if not 0.0 <= phi <= params.phi_max:
        raise DomainError(f"phi must lie in [0, {params.phi_max}], got {phi}")


def G(phi: float, params: BoundParams) -> float:
    """Normalized envelope G(phi) for the given (c, beta, delta)."""
    _check_phi(phi, params)
    linear = 2.0 * params.beta * params.c * (params.phi_max - phi)
    return linear + (2.0 * params.alpha / math.pi) * sine_integral(math.pi * params.c * phi)


def G_array(phi, params: BoundParams) -> np.ndarray:
    """G over a grid of phi values."""
    phi = np.asarray(phi, dtype=float)
    linear = 2.0 * params.beta * params.c * (params.phi_max - phi)
    return linear + (2.0 * params.alpha / math.pi) * sine_integral_array(math.pi * params.c * phi)


def G_derivative(phi: float, params: BoundParams) -> float:
    """dG/dphi = 2c (alpha sinc(pi c phi) - beta)."""
    _check_phi(phi, params)
    return 2.0 * params.c * (params.alpha * sinc(math.pi * params.c * phi) - params.beta)


def G_derivative_sign(phi: float, params: BoundParams) -> int:
    """Sign of dG/dphi: +1, 0 or -1.

    Note that phi grows as w shrinks, so this is the opposite sign of dG/dw.
    """
    _check_phi(phi, params)
    slope = params.alpha * sinc(math.pi * params.c * phi) - params.beta
    if slope > 0.0:
        return 1
    if slope < 0.0:
        return -1
    return 0


def g_prime_at_w_one(params: BoundParams) -> float:
    """Normalized dG/dw at w = 1 (phi = 1 - delta); positive iff an interior critical point exists."""
    return 2.0 * params.c * (params.beta - params.alpha * sinc(math.pi * params.c * params.phi_max))


def solve_phi0(params: BoundParams, tol: Optional[float] = None) -> CriticalPoint:
    """Solve sinc(pi c phi0) = 4 beta^2 on [0, 1 - delta] by bisection.

    sinc is strictly decreasing on [0, pi] and pi c (1 - delta) < pi, so a
    sign change brackets exactly one root. Without a sign change the result is
    tagged ``exists=False`` and sits at the right endpoint.

    Raises:
        CaseError: beta > 1/2, where Case 1 applies and no critical point is needed.
    """
    tol = Config.TOL_PHI if tol is None else tol
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if params.beta > 0.5:
        raise CaseError(f"beta = {params.beta} > 1/2 belongs to Case 1")
    target = 4.0 * params.beta * params.beta
    scale = math.pi * params.c

    def excess(phi: float) -> float:
        return sinc(scale * phi) - target

    if target == 1.0:
        return CriticalPoint(phi0=0.0, residual=0.0, bracket=(0.0, 0.0))

    lo, hi = 0.0, params.phi_max
    at_hi = excess(hi)
    if at_hi > 0.0:
        return CriticalPoint(phi0=hi, residual=abs(at_hi), bracket=(lo, hi), exists=False)
    if at_hi == 0.0:
        return CriticalPoint(phi0=hi, residual=0.0, bracket=(hi, hi))

    iterations = 0
    while hi - lo > tol and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if excess(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    phi0 = 0.5 * (lo + hi)
    return CriticalPoint(
        phi0=phi0, residual=abs(excess(phi0)), bracket=(lo, hi), iterations=iterations
    )


def evaluate_bound(params: BoundParams, tol: Optional[float] = None) -> BoundEvaluation:
    """Maximum of G over [0, 1 - delta] and the bound h(c) <= c + max G.

    Case 1 (beta >= alpha) is closed form: G decreases in phi and the maximum
    2 beta c (1 - delta) sits at phi = 0. In Case 2 dG/dphi decreases strictly,
    so an interior critical point, when present, is the unique maximum.
    """
    c = params.c
    if params.beta >= params.alpha:
        g_max = 2.0 * params.beta * c * params.phi_max
        return BoundEvaluation(
            params=params,
            g_max=g_max,
            h_upper=c + g_max,
            maximizer=MaximizerKind.ENDPOINT_PHI0_ZERO,
            phi_at_max=0.0,
            case=BoundCase.CASE1,
        )

    point = solve_phi0(params, tol)
    at_zero = G(0.0, params)
    at_one = G(params.phi_max, params)
    if point.exists:
        interior = G(point.phi0, params)
        candidates = [
            (interior, MaximizerKind.INTERIOR, point.phi0),
            (at_zero, MaximizerKind.ENDPOINT_PHI0_ZERO, 0.0),
            (at_one, MaximizerKind.ENDPOINT_PHI_ONE, params.phi_max),
        ]
    else:
        candidates = [
            (at_one, MaximizerKind.ENDPOINT_PHI_ONE, params.phi_max),
            (at_zero, MaximizerKind.ENDPOINT_PHI0_ZERO, 0.0),
        ]
    # max keeps the first of equal values, so ties resolve to the interior point
    g_max, kind, phi = max(candidates, key=lambda item: item[0])
    return BoundEvaluation(
        params=params,
        g_max=g_max,
        h_upper=c + g_max,
        maximizer=kind,
        phi_at_max=phi,
        case=BoundCase.CASE2,
        critical_point=point,
        has_interior=point.exists,
    )


class BetaOptimizer:
    """Minimizes h_upper(c, beta) over beta: coarse grid, then golden section."""

    def __init__(
        self,
        beta_range: Optional[Tuple[float, float]] = None,
        tol: Optional[float] = None,
        grid: Optional[int] = None,
        delta: float = 0.0,
        phi_tol: Optional[float] = None,
    ):
        """Initialize the optimizer.

        Args:
            beta_range: Search interval inside (0, 1/2] (default from config)
            tol: Final width of the golden-section bracket
            grid: Number of coarse grid points
            delta: Shrinkage parameter shared by every evaluation
            phi_tol: Bisection tolerance for the critical point
        """
        low, high = beta_range or (Config.BETA_MIN, Config.BETA_MAX)
        if not 0.0 < low < high <= 0.5:
            raise DomainError(f"beta range must satisfy 0 < low < high <= 1/2, got ({low}, {high})")
        self.low = low
        self.high = high
        self.tol = Config.TOL_BETA if tol is None else tol
        if not self.tol > 0.0:
            raise DomainError(f"tol must be positive, got {self.tol}")
        self.grid = Config.BETA_GRID if grid is None else grid
        if self.grid < 2:
            raise DomainError(f"grid must have at least 2 points, got {self.grid}")
        self.delta = delta
        self.phi_tol = phi_tol
        self.evaluations = 0

    def evaluate(self, c: float, beta: float) -> BoundEvaluation:
        self.evaluations += 1
        return evaluate_bound(make_params(c, beta, self.delta), self.phi_tol)

    def optimize(self, c: float) -> Tuple[float, BoundEvaluation]:
        """Return (beta_star, evaluation at beta_star) for one value of c."""
        betas = np.linspace(self.low, self.high, self.grid)
        values = np.array([self.evaluate(c, float(beta)).h_upper for beta in betas])
        best = int(np.argmin(values))
        a = float(betas[max(best - 1, 0)])
        b = float(betas[min(best + 1, len(betas) - 1)])

        x1 = b - GOLDEN_RATIO * (b - a)
        x2 = a + GOLDEN_RATIO * (b - a)
        f1 = self.evaluate(c, x1).h_upper
        f2 = self.evaluate(c, x2).h_upper
        while b - a > self.tol:
            if f2 > f1:
                b, x2, f2 = x2, x1, f1
                x1 = b - GOLDEN_RATIO * (b - a)
                f1 = self.evaluate(c, x1).h_upper
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + GOLDEN_RATIO * (b - a)
                f2 = self.evaluate(c, x2).h_upper

        refined = self.evaluate(c, 0.5 * (a + b))
        if refined.h_upper <= values[best]:
            return 0.5 * (a + b), refined
        beta_star = float(betas[best])
        return beta_star, self.evaluate(c, beta_star)


def optimize_beta(
    c: float,
    beta_range: Optional[Tuple[float, float]] = None,
    tol: Optional[float] = None,
    grid: Optional[int] = None,
    delta: float = 0.0,
    phi_tol: Optional[float] = None,
) -> Tuple[float, BoundEvaluation]:
    """Smallest h_upper(c, beta) over beta in beta_range.

    Unimodality in beta is observed rather than proved; certification never
    relies on it (see verify_interval).
    """
    optimizer = BetaOptimizer(beta_range, tol, grid, delta, phi_tol)
    return optimizer.optimize(c)


def find_critical_c(
    c_bracket: Tuple[float, float] = (0.5, 0.52),
    tol: Optional[float] = None,
    optimizer: Optional[BetaOptimizer] = None,
    logger: Optional[RunLogger] = None,
) -> OptimizationResult:
    """Bisect c on the predicate min_beta h_upper(c, beta) < 1.

    Returns the largest certified c with its witness. The trace is checked
    for monotonicity: certified points must all lie below uncertified ones and
    the minimized bound must not decrease as c grows.

    Raises:
        BracketError: The predicate holds (or fails) at both ends.
        MonotonicityError: The trace contradicts a monotone threshold.
    """
    tol = Config.TOL_C if tol is None else tol
    low, high = c_bracket
    if not 0.0 < low < high < 1.0:
        raise DomainError(f"c bracket must satisfy 0 < low < high < 1, got {c_bracket}")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    optimizer = optimizer or BetaOptimizer()
    trace: List[CTraceEntry] = []

    def probe(c: float) -> Tuple[float, BoundEvaluation]:
        beta_star, evaluation = optimizer.optimize(c)
        trace.append(
            CTraceEntry(
                c=c,
                beta_star=beta_star,
                h_star=evaluation.h_upper,
                certified=evaluation.h_upper < 1.0,
            )
        )
        if logger:
            logger.log_stage("c_probe", {"c": c, "beta": beta_star, "h": evaluation.h_upper})
        return beta_star, evaluation

    best = probe(low)
    at_high = probe(high)
    if not best[1].h_upper < 1.0 or at_high[1].h_upper < 1.0:
        raise BracketError(
            f"bracket [{low}, {high}] does not straddle h = 1",
            low_value=best[1].h_upper,
            high_value=at_high[1].h_upper,
        )

    iterations = 0
    while high - low > tol:
        mid = 0.5 * (low + high)
        result = probe(mid)
        if result[1].h_upper < 1.0:
            low, best = mid, result
        else:
            high = mid
        iterations += 1

    _check_monotone(trace)
    beta_star, evaluation = best
    return OptimizationResult(
        c_star=low,
        beta_star=beta_star,
        phi_star=evaluation.phi_at_max,
        h_star=evaluation.h_upper,
        beta_evals=optimizer.evaluations,
        c_iterations=iterations,
        trace=trace,
    )


def _check_monotone(trace: Sequence[CTraceEntry], slack: float = 1e-12) -> None:
    ordered = sorted(trace, key=lambda entry: entry.c)
    seen_uncertified = False
    previous = -math.inf
    for entry in ordered:
        if entry.certified and seen_uncertified:
            raise MonotonicityError(f"c = {entry.c} certified above an uncertified point")
        seen_uncertified = seen_uncertified or not entry.certified
        if entry.h_star < previous - slack:
            raise MonotonicityError(f"minimized bound decreased at c = {entry.c}")
        previous = entry.h_star


def verify_interval(params: BoundParams, grid_size: Optional[int] = None) -> VerificationReport:
    """Certify c + G(phi) < 1 on a uniform phi grid over [0, 1 - delta].

    Also confirms that alpha sinc(pi c phi) - beta does not increase across the
    grid (differences within rounding of the slope scale count as ties), so
    dG/dphi changes sign at most once.
    """
    grid_size = Config.VERIFY_GRID if grid_size is None else grid_size
    if grid_size < 2:
        raise DomainError(f"grid_size must be at least 2, got {grid_size}")
    warnings = []
    if grid_size == 2:
        warnings.append("grid of 2 points checks the endpoints only")

    phis = np.linspace(0.0, params.phi_max, grid_size)
    values = params.c + G_array(phis, params)
    index = int(np.argmax(values))
    max_value = float(values[index])

    slope = params.alpha * sinc_array(math.pi * params.c * phis) - params.beta
    tie = STRUCTURE_SLACK * (params.alpha + params.beta)
    structure_ok = bool(np.all(np.diff(slope) <= tie))
    signs = np.sign(slope)
    signs = signs[signs != 0.0]
    sign_changes = int(np.count_nonzero(np.diff(signs)))
    structure_ok = structure_ok and sign_changes <= 1

    return VerificationReport(
        params=params,
        grid_size=grid_size,
        max_value=max_value,
        phi_at_max=float(phis[index]),
        sign_changes=sign_changes,
        structure_ok=structure_ok,
        passed=max_value < 1.0 and structure_ok,
        warnings=warnings,
    )


def cgg_comparison_bound(c: float, alpha: float, beta: float) -> float:
    """Bound h(c) <= c + 2c max(alpha, beta) from the cruder S1 estimate.

    Minimized at alpha = beta = 1/2, where it equals 2c.
    """
    if not (alpha > 0.0 and beta > 0.0):
        raise DomainError("alpha and beta must be positive")
    if 4.0 * alpha * beta < 1.0 - 1e-12:
        raise DomainError(f"4 alpha beta = {4.0 * alpha * beta} < 1; the AM-GM split is invalid")
    return c + 2.0 * c * max(alpha, beta)


def scan_beta(
    c: float,
    beta_min: float,
    beta_max: float,
    steps: int,
    delta: float = 0.0,
    phi_tol: Optional[float] = None,
) -> List[BoundEvaluation]:
    """evaluate_bound on a uniform beta grid including both endpoints."""
    if steps < 2:
        raise DomainError(f"steps must be at least 2, got {steps}")
    if not 0.0 < beta_min < beta_max:
        raise DomainError(f"beta range must satisfy 0 < min < max, got ({beta_min}, {beta_max})")
    return [
        evaluate_bound(make_params(c, float(beta), delta), phi_tol)
        for beta in np.linspace(beta_min, beta_max, steps)
    ]


def delta_sensitivity(
    c: float, beta: float, deltas: Iterable[float], phi_tol: Optional[float] = None
) -> List[BoundEvaluation]:
    """evaluate_bound at fixed (c, beta) for several shrinkage values."""
    return [evaluate_bound(make_params(c, beta, delta), phi_tol) for delta in deltas]
