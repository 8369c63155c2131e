"""Limitation constants of the pair-correlation method for small and large gaps."""
from gapbound.bound_core import (
    BetaOptimizer,
    G,
    G_array,
    G_derivative,
    G_derivative_sign,
    cgg_comparison_bound,
    delta_sensitivity,
    evaluate_bound,
    find_critical_c,
    g_kernel,
    g_prime_at_w_one,
    optimize_beta,
    scan_beta,
    solve_phi0,
    verify_interval,
)
from gapbound.config import Config, get_config
from gapbound.errors import (
    AuditError,
    BracketError,
    CaseError,
    ConvergenceError,
    DomainError,
    GapBoundError,
    MonotonicityError,
)
from gapbound.large_gap_bounds import find_large_gap_threshold, h_lower
from gapbound.models import (
    BoundCase,
    BoundEvaluation,
    BoundParams,
    ChainAudit,
    CriticalPoint,
    LargeGapVariant,
    MaximizerKind,
    OptimizationResult,
    QuadratureSpec,
    VerificationReport,
    make_params,
)
from gapbound.sieve_oracle import (
    CoefficientScheme,
    H_direct,
    SieveTable,
    build_sieve,
    chain_audit,
    chebyshev_L,
    divisor_identity_check,
    empirical_ratio,
    load_sieve,
    save_sieve,
)
from gapbound.special_functions import abs_sinc_integral, sinc, sine_integral, sinc_squared_integral

__all__ = [
    "BetaOptimizer",
    "G",
    "G_array",
    "G_derivative",
    "G_derivative_sign",
    "cgg_comparison_bound",
    "delta_sensitivity",
    "evaluate_bound",
    "find_critical_c",
    "g_kernel",
    "g_prime_at_w_one",
    "optimize_beta",
    "scan_beta",
    "solve_phi0",
    "verify_interval",
    "Config",
    "get_config",
    "AuditError",
    "BracketError",
    "CaseError",
    "ConvergenceError",
    "DomainError",
    "GapBoundError",
    "MonotonicityError",
    "find_large_gap_threshold",
    "h_lower",
    "BoundCase",
    "BoundEvaluation",
    "BoundParams",
    "ChainAudit",
    "CriticalPoint",
    "LargeGapVariant",
    "MaximizerKind",
    "OptimizationResult",
    "QuadratureSpec",
    "VerificationReport",
    "make_params",
    "CoefficientScheme",
    "H_direct",
    "SieveTable",
    "build_sieve",
    "chain_audit",
    "chebyshev_L",
    "divisor_identity_check",
    "empirical_ratio",
    "load_sieve",
    "save_sieve",
    "abs_sinc_integral",
    "sinc",
    "sine_integral",
    "sinc_squared_integral",
]
