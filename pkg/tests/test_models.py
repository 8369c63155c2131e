# Model Tests
"""Tests for the pydantic domain models."""
import pytest

from gapbound.errors import DomainError
from gapbound.models import (
    BoundCase,
    BoundEvaluation,
    CTraceEntry,
    MaximizerKind,
    OptimizationResult,
    make_params,
)


def test_bound_params_derived_values():
    """Test alpha and phi_max."""
    params = make_params(0.5042, 0.476, 0.2)
    assert params.alpha == pytest.approx(1 / (4 * 0.476))
    assert params.phi_max == pytest.approx(0.8)


def test_bound_params_frozen():
    """Test that parameters cannot be reassigned."""
    params = make_params(0.5, 0.4)
    with pytest.raises(Exception):
        params.c = 0.6


def test_bound_params_invalid():
    """Test that out-of-range parameters raise DomainError."""
    for c, beta, delta in ((0.0, 0.4, 0.0), (1.0, 0.4, 0.0), (0.5, -0.1, 0.0), (0.5, 0.4, 1.0)):
        with pytest.raises(DomainError):
            make_params(c, beta, delta)


def test_bound_evaluation_sum_invariant():
    """Test that h_upper must equal c + g_max."""
    params = make_params(0.5, 0.6)
    with pytest.raises(ValueError):
        BoundEvaluation(
            params=params,
            g_max=0.6,
            h_upper=1.2,
            maximizer=MaximizerKind.ENDPOINT_PHI0_ZERO,
            phi_at_max=0.0,
            case=BoundCase.CASE1,
        )


def test_optimization_result_witness_ranges():
    """Test the witness bounds on beta and phi."""
    trace = [CTraceEntry(c=0.5, beta_star=0.47, h_star=0.99, certified=True)]
    with pytest.raises(ValueError):
        OptimizationResult(
            c_star=0.5, beta_star=0.6, phi_star=0.48, h_star=0.99,
            beta_evals=1, c_iterations=0, trace=trace,
        )
