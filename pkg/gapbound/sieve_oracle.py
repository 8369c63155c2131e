# Sieve Oracle
"""Finite-scale ground truth for the prime-power sums behind the bound.

Provides:
- von Mangoldt table Lambda(n) with prefix sums L(x) = sum of Lambda(n)/n
- H(x) = sum of g(n) Lambda(n)/n by direct summation
- the divisor identity sum over d | n of Lambda(d) = log n
- the quadratic-form quantities S, S1, S2 for explicit coefficients b_k,
  and an audit of every inequality linking them to max G
"""
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from gapbound.bound_core import G_array, evaluate_bound, g_kernel_array
from gapbound.config import Config
from gapbound.errors import AuditError, DomainError
from gapbound.models import AuditLink, BoundParams, ChainAudit, DivisorIdentityReport
from gapbound.special_functions import sine_integral_array

SIEVE_CACHE_VERSION = 1
DIVISOR_TOLERANCE = 1e-9
EXACT_SLACK = 1e-12


@dataclass(frozen=True)
class SieveTable:
    """Precomputed von Mangoldt values up to limit.

    Attributes:
        limit: Maximum index N
        mangoldt: float64 array of length N+1, mangoldt[n] = Lambda(n), mangoldt[0] = 0
        prefix_L: float64 array of length N+1, prefix_L[n] = L(n)
        prime_powers: int64 array of every n <= N with Lambda(n) > 0, increasing
    """

    limit: int
    mangoldt: np.ndarray
    prefix_L: np.ndarray
    prime_powers: np.ndarray

    @classmethod
    def from_mangoldt(cls, mangoldt: np.ndarray) -> "SieveTable":
        """Derive prefix sums and the prime-power index from a Lambda array."""
        mangoldt = np.array(mangoldt, dtype=np.float64)
        limit = len(mangoldt) - 1
        terms = np.zeros(limit + 1)
        terms[1:] = mangoldt[1:] / np.arange(1, limit + 1)
        prefix_L = np.cumsum(terms)
        prime_powers = np.flatnonzero(mangoldt > 0.0).astype(np.int64)
        for array in (mangoldt, prefix_L, prime_powers):
            array.setflags(write=False)
        return cls(limit=limit, mangoldt=mangoldt, prefix_L=prefix_L, prime_powers=prime_powers)


def build_sieve(N: int) -> SieveTable:
    """Eratosthenes sieve realizing Lambda(n) = log p at n = p^k, else 0.

    Args:
        N: Upper bound (inclusive), 2 <= N <= Config.SIEVE_MAX (10^7 by default)
    """
    N = int(N)
    if N < 2:
        raise DomainError(f"sieve limit must be at least 2, got {N}")
    if N > Config.SIEVE_MAX:
        raise DomainError(f"sieve limit {N} exceeds GAPBOUND_SIEVE_MAX = {Config.SIEVE_MAX}")

    is_prime = np.ones(N + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(N) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    primes = np.flatnonzero(is_prime)

    mangoldt = np.zeros(N + 1)
    log_primes = np.log(primes.astype(np.float64))
    mangoldt[primes] = log_primes
    for p, log_p in zip(primes[primes <= math.isqrt(N)], log_primes):
        power = int(p) * int(p)
        while power <= N:
            mangoldt[power] = log_p
            power *= int(p)
    return SieveTable.from_mangoldt(mangoldt)


def save_sieve(table: SieveTable, path: Union[str, Path]) -> Path:
    """Write the table to an .npz cache holding {version, limit, mangoldt}."""
    path = Path(path)
    with path.open("wb") as handle:
        np.savez(
            handle,
            version=np.int64(SIEVE_CACHE_VERSION),
            limit=np.int64(table.limit),
            mangoldt=table.mangoldt,
        )
    return path


def load_sieve(path: Union[str, Path]) -> SieveTable:
    """Read a cache written by save_sieve; Lambda values round-trip bit-exactly."""
    with np.load(Path(path)) as data:
        version = int(data["version"])
        if version != SIEVE_CACHE_VERSION:
            raise DomainError(f"sieve cache version {version}, expected {SIEVE_CACHE_VERSION}")
        mangoldt = data["mangoldt"]
        if int(data["limit"]) != len(mangoldt) - 1:
            raise DomainError("sieve cache header does not match its Lambda array")
        return SieveTable.from_mangoldt(mangoldt)


def sieve_for(N: int) -> SieveTable:
    """Load the configured cache when it covers N, else build a fresh table."""
    if Config.SIEVE_CACHE and Path(Config.SIEVE_CACHE).exists():
        table = load_sieve(Config.SIEVE_CACHE)
        if table.limit >= N:
            return table
    return build_sieve(N)


def _check_x(table: SieveTable, x: float) -> int:
    if not 1.0 <= x <= table.limit:
        raise DomainError(f"x must lie in [1, {table.limit}], got {x}")
    return int(math.floor(x))


def chebyshev_L(table: SieveTable, x: float) -> float:
    """L(x) = sum over n <= x of Lambda(n)/n."""
    return float(table.prefix_L[_check_x(table, x)])


def _h_cumulative(table: SieveTable, X: int, c: float, logT: float) -> np.ndarray:
    """Running H(n) for n = 0..X."""
    powers = table.prime_powers[table.prime_powers <= X]
    t = np.minimum(np.log(powers.astype(np.float64)) / logT, 1.0)
    terms = np.zeros(X + 1)
    terms[powers] = g_kernel_array(t, c, logT) * table.mangoldt[powers] / powers
    return np.cumsum(terms)


def H_direct(table: SieveTable, x: float, c: float, logT: float) -> float:
    """H(x) = sum over n <= x of g(n) Lambda(n)/n, summed exactly."""
    X = _check_x(table, x)
    if logT < math.log(x):
        raise DomainError(f"logT = {logT} is below log x = {math.log(x)}")
    return float(_h_cumulative(table, X, c, logT)[X])


def divisor_identity_check(table: SieveTable, M: int) -> DivisorIdentityReport:
    """Check sum over d | n of Lambda(d) = log n for every n <= M."""
    M = int(M)
    if not 1 <= M <= table.limit:
        raise DomainError(f"M must lie in [1, {table.limit}], got {M}")
    totals = np.zeros(M + 1)
    for n in table.prime_powers[table.prime_powers <= M]:
        totals[n::n] += table.mangoldt[n]
    deviation = np.abs(totals[1:] - np.log(np.arange(1, M + 1, dtype=np.float64)))
    worst = int(np.argmax(deviation))
    max_deviation = float(deviation[worst])
    return DivisorIdentityReport(
        limit=M,
        max_deviation=max_deviation,
        worst_n=worst + 1,
        tolerance=DIVISOR_TOLERANCE,
        passed=max_deviation <= DIVISOR_TOLERANCE,
    )


@dataclass(frozen=True)
class CoefficientScheme:
    """The sequence b_k; a_k = b_k k^(-1/2) is implied."""

    tag: str
    values: Optional[np.ndarray] = None

    @classmethod
    def ones(cls) -> "CoefficientScheme":
        return cls(tag="ones")

    @classmethod
    def custom(cls, values) -> "CoefficientScheme":
        """Explicit b_1, b_2, ...; values[0] is b_1."""
        values = np.array(values, dtype=np.float64)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise DomainError("coefficients must be a finite one-dimensional sequence")
        if not np.any(values != 0.0):
            raise DomainError("coefficients must not vanish identically")
        values.setflags(write=False)
        return cls(tag="custom", values=values)

    @classmethod
    def b1_only(cls, length: int) -> "CoefficientScheme":
        values = np.zeros(length)
        values[0] = 1.0
        return cls.custom(values)

    def coefficients(self, Y: int) -> np.ndarray:
        """|b_k| for k = 0..Y with a zero in slot 0."""
        out = np.zeros(Y + 1)
        if self.tag == "ones":
            out[1:] = 1.0
            return out
        if len(self.values) < Y:
            raise DomainError(f"scheme has {len(self.values)} coefficients, needs {Y}")
        out[1:] = np.abs(self.values[:Y])
        return out


@dataclass(frozen=True)
class EmpiricalRun:
    """Direct double sums for one (T, delta, c, scheme)."""

    T: float
    y: float
    c: float
    delta: float
    scheme: CoefficientScheme
    S: float
    norm: float
    ratio: float
    S1: float
    S2: float
    s2_bound: float
    s1_cgg_bound: float
    h_values: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def logT(self) -> float:
        return math.log(self.T)

    @property
    def Y(self) -> int:
        return len(self.weights) - 1


def empirical_ratio(
    table: SieveTable, T: float, delta: float, c: float, scheme: CoefficientScheme
) -> EmpiricalRun:
    """Compute S, S1, S2 and the ratio S / sum |b_k|^2/k by direct summation.

        S  = sum over kn <= y of |b_k| |b_kn| g(n) Lambda(n) / (kn)
        S1 = sum over k <= y of (|b_k|^2 / k) H(y/k)
        S2 = sum over kn <= y of (|b_kn|^2 / (kn)) g(n) Lambda(n)
    """
    if not T > 1.0:
        raise DomainError(f"T must exceed 1, got {T}")
    if not 0.0 <= delta < 1.0:
        raise DomainError(f"delta must lie in [0, 1), got {delta}")
    logT = math.log(T)
    y = T ** (1.0 - delta)
    Y = int(math.floor(y))
    if Y > table.limit:
        raise DomainError(f"y = {y} exceeds the sieve limit {table.limit}")
    if Y < 1:
        raise DomainError(f"y = {y} leaves no coefficients")

    b = scheme.coefficients(Y)
    k = np.arange(Y + 1, dtype=np.float64)
    weights = np.zeros(Y + 1)
    weights[1:] = b[1:] ** 2 / k[1:]
    norm = float(np.sum(weights))
    if not norm > 0.0:
        raise DomainError("coefficients vanish on [1, y]")

    powers = table.prime_powers[table.prime_powers <= Y]
    t = np.minimum(np.log(powers.astype(np.float64)) / logT, 1.0)
    g_lambda = g_kernel_array(t, c, logT) * table.mangoldt[powers]

    s_terms = np.zeros(len(powers))
    s2_terms = np.zeros(len(powers))
    for index, n in enumerate(powers):
        m = Y // n
        ks = k[1 : m + 1]
        multiples = b[n : n * m + 1 : n]
        s_terms[index] = np.sum(b[1 : m + 1] * multiples / ks) * g_lambda[index] / n
        s2_terms[index] = np.sum(multiples**2 / ks) * g_lambda[index] / n
    S = float(np.sum(s_terms))
    S2 = float(np.sum(s2_terms))

    h_cumulative = _h_cumulative(table, Y, c, logT)
    quotients = Y // np.arange(1, Y + 1)
    h_values = np.zeros(Y + 1)
    h_values[1:] = h_cumulative[quotients]
    S1 = float(np.sum(weights * h_values))

    log_k = np.zeros(Y + 1)
    log_k[1:] = np.log(k[1:])
    s2_bound = 2.0 * c / logT * float(np.sum(weights * log_k))
    s1_cgg_bound = 2.0 * c / logT * float(np.sum(weights[1:] * table.prefix_L[quotients]))

    for array in (h_values, weights):
        array.setflags(write=False)
    return EmpiricalRun(
        T=T,
        y=y,
        c=c,
        delta=delta,
        scheme=scheme,
        S=S,
        norm=norm,
        ratio=S / norm,
        S1=S1,
        S2=S2,
        s2_bound=s2_bound,
        s1_cgg_bound=s1_cgg_bound,
        h_values=h_values,
        weights=weights,
    )


def cgg_s1_bound(
    table: SieveTable, T: float, delta: float, c: float, scheme: CoefficientScheme
) -> float:
    """S1 <= (2c/log T) sum over k of (|b_k|^2/k) L(y/k), from g <= 2c/log T."""
    return empirical_ratio(table, T, delta, c, scheme).s1_cgg_bound


def _exact_link(name: str, description: str, lhs: float, rhs: float) -> AuditLink:
    margin = rhs - lhs
    allowed = EXACT_SLACK * max(abs(lhs), abs(rhs), 1e-300)
    return AuditLink(
        name=name,
        description=description,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        exact=True,
        passed=margin >= -allowed,
    )


def chain_audit(run: EmpiricalRun, params: BoundParams) -> ChainAudit:
    """Check every link from the ratio S/norm to max G.

    Links (i), (ii) and (v) are unconditional inequalities and must hold with
    no slack. Links (iii) and (iv) carry the O(1/log T) terms; they record the
    observed error magnitudes.

    Raises:
        AuditError: An exact link is violated.
    """
    if not (math.isclose(run.c, params.c, rel_tol=0.0, abs_tol=1e-15)
            and math.isclose(run.delta, params.delta, rel_tol=0.0, abs_tol=1e-15)):
        raise DomainError("run and params must share c and delta")
    alpha, beta = params.alpha, params.beta
    logT = run.logT
    links = [
        _exact_link(
            "i",
            "S <= alpha S1 + beta S2",
            run.S,
            alpha * run.S1 + beta * run.S2,
        ),
        _exact_link(
            "ii",
            "S2 <= (2c/log T) sum (|b_k|^2/k) log k",
            run.S2,
            run.s2_bound,
        ),
        _exact_link(
            "v",
            "S1 <= (2c/log T) sum (|b_k|^2/k) L(y/k)",
            run.S1,
            run.s1_cgg_bound,
        ),
    ]

    Y = run.Y
    k = np.arange(1, Y + 1, dtype=np.float64)
    log_x = np.log(run.y / k)
    phi = np.clip(log_x / logT, 0.0, params.phi_max)
    approx = (2.0 / math.pi) * sine_integral_array(math.pi * params.c * phi)
    error = run.h_values[1:] - approx
    active = run.weights[1:] > 0.0
    worst = float(np.max(np.abs(error[active])))
    fit_region = active & (log_x >= math.log(2.0))
    fitted = (
        float(np.max(np.abs(error[fit_region]) * logT**3 / log_x[fit_region] ** 2))
        if np.any(fit_region)
        else 0.0
    )
    links.append(
        AuditLink(
            name="iii",
            description="H(y/k) vs (2/pi) Si(pi c log(y/k)/log T)",
            lhs=worst,
            rhs=fitted,
            margin=0.0,
            exact=False,
            passed=True,
            details={"max_abs_error": worst, "fitted_constant": fitted},
        )
    )

    g_max = evaluate_bound(params).g_max
    exact_bound = (alpha * run.S1 + beta * run.s2_bound) / run.norm
    envelope = float(np.sum(run.weights[1:] * G_array(phi, params))) / run.norm
    slack = exact_bound - envelope
    rhs = g_max + max(0.0, slack)
    links.append(
        AuditLink(
            name="iv",
            description="S/norm <= max G + slack",
            lhs=run.ratio,
            rhs=rhs,
            margin=rhs - run.ratio,
            exact=False,
            passed=run.ratio <= rhs + EXACT_SLACK,
            details={"slack": slack, "slack_times_logT": slack * logT, "envelope": envelope},
        )
    )

    for link in links:
        if link.exact and not link.passed:
            raise AuditError(
                f"link ({link.name}) {link.description} violated: margin {link.margin:.3e}",
                link=link.name,
            )
    return ChainAudit(
        T=run.T,
        c=params.c,
        alpha=alpha,
        beta=beta,
        ratio=run.ratio,
        g_max=g_max,
        slack=abs(slack),
        links=links,
        passed=all(link.passed for link in links),
    )
