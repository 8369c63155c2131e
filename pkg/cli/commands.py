# CLI Commands
"""Argument parsing and the six gapbound commands.

Exit codes:
    0: command ran and passed
    1: numerical failure (non-convergence, bracket error, failed audit or check)
    2: usage error (bad flag, invalid range, invalid configuration)
"""
import argparse
import math
import sys
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from cli.models import CommandReport, ReproduceRow, RunConfig
from cli.output import emit
from gapbound.bound_core import (
    BetaOptimizer,
    evaluate_bound,
    find_critical_c,
    optimize_beta,
    scan_beta,
    solve_phi0,
    verify_interval,
)
from gapbound.config import Config
from gapbound.errors import DomainError, GapBoundError
from gapbound.large_gap_bounds import DEFAULT_BRACKETS, find_large_gap_threshold, h_lower
from gapbound.models import LargeGapVariant, QuadratureSpec, make_params
from gapbound.sieve_oracle import (
    CoefficientScheme,
    chain_audit,
    divisor_identity_check,
    empirical_ratio,
    sieve_for,
)
from utils.run_logger import RunLogger

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

C0 = 0.5042
BETA0 = 0.476
PHI0 = 0.48025375569
H_C0 = 0.999993501
THRESHOLD_V1 = 5.5602
THRESHOLD_V2 = 3.6747

# Published precision of each constant
REPRODUCE_TOLERANCES = {
    "c0": 1e-4,
    "beta0": 5e-3,
    "phi0": 1e-11,
    "h(c0)": 1e-9,
    "threshold_v1": 1e-4,
    "threshold_v2": 1e-4,
}

DIVISOR_CHECK_MAX = 100000
THRESHOLD_TABLE_OFFSETS = (-0.02, -0.01, 0.0, 0.01, 0.02)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=["human", "json", "csv"], default="human",
                        help="Output format (default: human)")
    common.add_argument("--json", dest="output", action="store_const", const="json",
                        help="Shorthand for --format json")
    common.add_argument("--csv", dest="output", action="store_const", const="csv",
                        help="Shorthand for --format csv")
    common.add_argument("--out", dest="output_path", default=None, help="Write output to this path")
    common.add_argument("--quiet", action="store_true", help="Suppress stage logging on stderr")
    common.add_argument("--high-precision", action="store_true",
                        help="Solve phi0 to GAPBOUND_TOL_PHI_HIGH (default 1e-12)")
    common.add_argument("--tol-c", type=float, default=None, help="Bisection width in c")
    common.add_argument("--tol-phi", type=float, default=None, help="Bisection width in phi0")
    common.add_argument("--tol-beta", type=float, default=None, help="Golden-section width in beta")
    common.add_argument("--tol-threshold", type=float, default=None,
                        help="Bisection width for large-gap thresholds")
    common.add_argument("--tol-quad", type=float, default=None, help="Absolute quadrature tolerance")
    common.add_argument("--beta-grid", type=int, default=None, help="Coarse beta grid size")
    common.add_argument("--verify-grid", type=int, default=None, help="Dense phi grid size")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the gapbound argument parser."""
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="gapbound",
        description="Limitation constants of the pair-correlation method for gaps between zeta zeros",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    critical = commands.add_parser("critical-c", parents=[common], help="Largest c with h(c) < 1")
    critical.add_argument("--bracket", nargs=2, type=float, default=[0.5, 0.52], metavar=("LOW", "HIGH"))

    scan = commands.add_parser("scan", parents=[common], help="Tabulate the bound over a beta grid")
    scan.add_argument("--c", type=float, default=C0)
    scan.add_argument("--beta-min", type=float, default=0.45)
    scan.add_argument("--beta-max", type=float, default=0.5)
    scan.add_argument("--steps", type=int, default=50)
    scan.add_argument("--delta", type=float, default=0.0)

    verify = commands.add_parser("verify", parents=[common], help="Certify c + G(phi) < 1 on a dense grid")
    verify.add_argument("--c", type=float, default=C0)
    verify.add_argument("--beta", type=float, default=BETA0)
    verify.add_argument("--grid", type=int, default=None, help="Grid size (default: GAPBOUND_VERIFY_GRID)")
    verify.add_argument("--delta", type=float, default=0.0)

    large = commands.add_parser("large-gaps", parents=[common], help="Thresholds where h_lower(c) crosses 1")
    large.add_argument("--variant", choices=["v1", "v2", "both"], default="both")
    large.add_argument("--bracket", nargs=2, type=float, default=None, metavar=("LOW", "HIGH"))

    oracle = commands.add_parser("oracle", parents=[common], help="Audit the prime-sum chain at T = 10^t")
    oracle.add_argument("--t-exp", type=int, default=None, help="T = 10^t_exp (default: GAPBOUND_ORACLE_T_EXP)")
    oracle.add_argument("--c", type=float, default=C0)
    oracle.add_argument("--beta", type=float, default=BETA0)
    oracle.add_argument("--delta", type=float, default=0.0)
    oracle.add_argument("--scheme", choices=["ones", "b1-only"], default="ones")

    commands.add_parser("reproduce", parents=[common], help="Compare against the published constants")
    return parser


def _pick(value, default):
    return default if value is None else value


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge parsed flags over the environment configuration."""
    return RunConfig(
        command=args.command,
        tol_c=_pick(args.tol_c, Config.TOL_C),
        tol_phi=_pick(args.tol_phi, Config.TOL_PHI),
        tol_phi_high=Config.TOL_PHI_HIGH,
        tol_beta=_pick(args.tol_beta, Config.TOL_BETA),
        tol_threshold=_pick(args.tol_threshold, Config.TOL_THRESHOLD),
        tol_quad=_pick(args.tol_quad, Config.TOL_QUAD),
        quad_max_depth=Config.QUAD_MAX_DEPTH,
        beta_grid=_pick(args.beta_grid, Config.BETA_GRID),
        verify_grid=_pick(getattr(args, "grid", None), _pick(args.verify_grid, Config.VERIFY_GRID)),
        output=args.output,
        output_path=args.output_path,
        high_precision=args.high_precision,
        quiet=args.quiet,
    )


def _quad_spec(run: RunConfig) -> QuadratureSpec:
    return QuadratureSpec(abs_tol=run.tol_quad, rel_tol=0.0, max_depth=run.quad_max_depth)


def _optimizer(run: RunConfig, delta: float = 0.0) -> BetaOptimizer:
    return BetaOptimizer(tol=run.tol_beta, grid=run.beta_grid, delta=delta, phi_tol=run.phi_tol)


def cmd_critical_c(args: argparse.Namespace, run: RunConfig, logger: RunLogger) -> CommandReport:
    """Bisect for the largest certified c and report the trace."""
    result = find_critical_c(tuple(args.bracket), run.tol_c, _optimizer(run), logger)
    return CommandReport(
        command="critical-c",
        passed=True,
        summary={
            "c_star": result.c_star,
            "beta_star": result.beta_star,
            "phi_star": result.phi_star,
            "h_star": result.h_star,
            "beta_evals": result.beta_evals,
            "c_iterations": result.c_iterations,
        },
        rows=[entry.model_dump() for entry in result.trace],
    )


def cmd_scan(args: argparse.Namespace, run: RunConfig, logger: RunLogger) -> CommandReport:
    """Evaluate the bound on a uniform beta grid."""
    evaluations = scan_beta(args.c, args.beta_min, args.beta_max, args.steps, args.delta, run.phi_tol)
    rows = [
        {
            "beta": item.params.beta,
            "phi0": item.critical_point.phi0 if item.has_interior else None,
            "maximizer": item.maximizer.value,
            "g_max": item.g_max,
            "h_upper": item.h_upper,
            "case": item.case.value,
        }
        for item in evaluations
    ]
    best = min(evaluations, key=lambda item: item.h_upper)
    logger.log_stage("scan", {"rows": len(rows), "best_beta": best.params.beta})
    return CommandReport(
        command="scan",
        passed=True,
        summary={"c": args.c, "best_beta": best.params.beta, "best_h_upper": best.h_upper},
        rows=rows,
    )


def cmd_verify(args: argparse.Namespace, run: RunConfig, logger: RunLogger) -> CommandReport:
    """Dense-grid certification at fixed (c, beta, delta)."""
    report = verify_interval(make_params(args.c, args.beta, args.delta), run.verify_grid)
    for warning in report.warnings:
        logger.log_stage("verify_warning", {"message": warning})
    return CommandReport(
        command="verify",
        passed=report.passed,
        summary={
            "c": args.c,
            "beta": args.beta,
            "delta": args.delta,
            "grid_size": report.grid_size,
            "max_value": report.max_value,
            "phi_at_max": report.phi_at_max,
            "sign_changes": report.sign_changes,
            "structure_ok": report.structure_ok,
        },
        warnings=list(report.warnings),
    )


def cmd_large_gaps(args: argparse.Namespace, run: RunConfig, logger: RunLogger) -> CommandReport:
    """Thresholds for the requested variants with h_lower tabulated around each."""
    if args.variant == "both":
        if args.bracket is not None:
            raise DomainError("--bracket needs a single --variant")
        variants = [LargeGapVariant.V1, LargeGapVariant.V2]
    else:
        variants = [LargeGapVariant(args.variant)]
    spec = _quad_spec(run)
    bracket = tuple(args.bracket) if args.bracket is not None else None

    summary: Dict[str, float] = {}
    rows: List[Dict] = []
    for variant in variants:
        threshold = find_large_gap_threshold(variant, bracket, run.tol_threshold, spec, logger)
        summary[f"threshold_{variant.value}"] = threshold
        for offset in THRESHOLD_TABLE_OFFSETS:
            c = threshold + offset
            rows.append({"variant": variant.value, "c": c, "h_lower": h_lower(c, variant, spec)})
    return CommandReport(command="large-gaps", passed=True, summary=summary, rows=rows)


def cmd_oracle(args: argparse.Namespace, run: RunConfig, logger: RunLogger) -> CommandReport:
    """Direct prime-power sums at T = 10^t_exp and the link-by-link audit."""
    t_exp = _pick(args.t_exp, Config.ORACLE_T_EXP)
    if t_exp < 1:
        raise DomainError(f"t_exp must be at least 1, got {t_exp}")
    T = 10.0**t_exp
    limit = int(10**t_exp)
    table = sieve_for(limit)
    logger.log_stage("sieve", {"limit": table.limit})

    params = make_params(args.c, args.beta, args.delta)
    Y = int(math.floor(T ** (1.0 - args.delta)))
    scheme = CoefficientScheme.b1_only(Y) if args.scheme == "b1-only" else CoefficientScheme.ones()
    run_sums = empirical_ratio(table, T, args.delta, args.c, scheme)
    logger.log_stage("empirical_ratio", {"S": run_sums.S, "ratio": run_sums.ratio})
    audit = chain_audit(run_sums, params)
    identity = divisor_identity_check(table, min(table.limit, DIVISOR_CHECK_MAX))

    rows = [
        {
            "link": link.name,
            "description": link.description,
            "lhs": link.lhs,
            "rhs": link.rhs,
            "margin": link.margin,
            "exact": link.exact,
            "passed": link.passed,
        }
        for link in audit.links
    ]
    iv = audit.link("iv").details
    iii = audit.link("iii").details
    return CommandReport(
        command="oracle",
        passed=audit.passed and identity.passed,
        summary={
            "T": T,
            "c": args.c,
            "beta": args.beta,
            "scheme": args.scheme,
            "S": run_sums.S,
            "S1": run_sums.S1,
            "S2": run_sums.S2,
            "norm": run_sums.norm,
            "ratio": audit.ratio,
            "g_max": audit.g_max,
            "slack": audit.slack,
            "slack_times_logT": iv["slack_times_logT"],
            "h_max_abs_error": iii["max_abs_error"],
            "h_fitted_constant": iii["fitted_constant"],
            "divisor_identity_max_deviation": identity.max_deviation,
        },
        rows=rows,
    )


def _row(constant: str, computed: float, reference: float) -> ReproduceRow:
    tolerance = REPRODUCE_TOLERANCES[constant]
    return ReproduceRow(
        constant=constant,
        computed=computed,
        reference=reference,
        tolerance=tolerance,
        passed=abs(computed - reference) < tolerance,
    )


def cmd_reproduce(args: argparse.Namespace, run: RunConfig, logger: RunLogger) -> CommandReport:
    """Run the full pipeline against the published constants."""
    critical = find_critical_c((0.5, 0.52), run.tol_c, _optimizer(run), logger)
    beta_star, _ = optimize_beta(C0, tol=run.tol_beta, grid=run.beta_grid, phi_tol=run.phi_tol)
    logger.log_stage("optimize_beta", {"c": C0, "beta": beta_star})

    witness = make_params(C0, BETA0)
    point = solve_phi0(witness, run.tol_phi_high)
    evaluation = evaluate_bound(witness, run.tol_phi_high)
    logger.log_stage("witness", {"phi0": point.phi0, "h": evaluation.h_upper})

    spec = _quad_spec(run)
    v1 = find_large_gap_threshold(LargeGapVariant.V1, DEFAULT_BRACKETS[LargeGapVariant.V1],
                                  run.tol_threshold, spec, logger)
    v2 = find_large_gap_threshold(LargeGapVariant.V2, DEFAULT_BRACKETS[LargeGapVariant.V2],
                                  run.tol_threshold, spec, logger)

    rows = [
        _row("c0", critical.c_star, C0),
        _row("beta0", beta_star, BETA0),
        _row("phi0", point.phi0, PHI0),
        _row("h(c0)", evaluation.h_upper, H_C0),
        _row("threshold_v1", v1, THRESHOLD_V1),
        _row("threshold_v2", v2, THRESHOLD_V2),
    ]
    return CommandReport(
        command="reproduce",
        passed=all(row.passed for row in rows),
        summary={
            "c_star": critical.c_star,
            "beta_star": critical.beta_star,
            "phi_star": critical.phi_star,
            "h_star": critical.h_star,
            "beta_evals": critical.beta_evals,
            "c_iterations": critical.c_iterations,
        },
        rows=[row.model_dump(by_alias=True) for row in rows],
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig, RunLogger], CommandReport]] = {
    "critical-c": cmd_critical_c,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "large-gaps": cmd_large_gaps,
    "oracle": cmd_oracle,
    "reproduce": cmd_reproduce,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and emit its report.

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    # Validate configuration
    errors = Config.validate()
    if errors:
        print("Configuration errors:", file=sys.stderr)
        for error in errors:
            print(f"  - {error}", file=sys.stderr)
        return EXIT_USAGE

    try:
        run_config = resolve_config(args)
    except ValidationError as exc:
        print(f"gapbound: invalid flags: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    logger = RunLogger(quiet=run_config.quiet)
    logger.start()
    try:
        report = COMMANDS[args.command](args, run_config, logger)
    except DomainError as exc:
        print(f"gapbound {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GapBoundError as exc:
        print(f"gapbound {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    emit(report, run_config.output, run_config.output_path)
    logger.log_stage("done", {"passed": report.passed, "total_seconds": logger.get_summary()["total_time_seconds"]})
    return EXIT_OK if report.passed else EXIT_NUMERICAL
