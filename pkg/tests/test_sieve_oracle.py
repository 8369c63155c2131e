# Sieve Oracle Tests
"""Tests for the von Mangoldt sieve and the prime-sum chain audit."""
import math

import numpy as np
import pytest

from gapbound.config import Config
from gapbound.errors import DomainError
from gapbound.models import make_params
from gapbound.sieve_oracle import (
    CoefficientScheme,
    H_direct,
    build_sieve,
    cgg_s1_bound,
    chain_audit,
    chebyshev_L,
    divisor_identity_check,
    empirical_ratio,
    load_sieve,
    save_sieve,
    sieve_for,
)
from gapbound.special_functions import sine_integral

EULER_GAMMA = 0.5772156649015329


def test_build_sieve_values():
    """Test Lambda on small n."""
    table = build_sieve(30)
    assert table.mangoldt[1] == 0.0
    assert table.mangoldt[6] == 0.0
    assert table.mangoldt[8] == math.log(2)
    assert table.mangoldt[9] == math.log(3)
    assert table.mangoldt[29] == math.log(29)
    assert list(table.prime_powers[:6]) == [2, 3, 4, 5, 7, 8]


def test_build_sieve_limits():
    """Test the sieve size limits."""
    with pytest.raises(DomainError):
        build_sieve(1)
    with pytest.raises(DomainError):
        build_sieve(Config.SIEVE_MAX + 1)


def test_sieve_table_read_only(sieve_small):
    """Test that table arrays cannot be modified."""
    with pytest.raises(ValueError):
        sieve_small.mangoldt[2] = 0.0


def test_chebyshev_L_hand_sum():
    """Test L(10) against a hand sum."""
    table = build_sieve(100)
    expected = (
        math.log(2) / 2 + math.log(3) / 3 + math.log(2) / 4 + math.log(5) / 5
        + math.log(7) / 7 + math.log(2) / 8 + math.log(3) / 9
    )
    assert chebyshev_L(table, 10) == pytest.approx(expected, abs=1e-14)
    assert chebyshev_L(table, 10.9) == chebyshev_L(table, 10)


def test_chebyshev_L_growth(sieve_medium):
    """Test L(x) - log x against its limit -gamma."""
    for x in (1e3, 1e4, 1e5):
        remainder = chebyshev_L(sieve_medium, x) - math.log(x)
        assert abs(remainder) < 2.0
        assert abs(remainder + EULER_GAMMA) < 0.1


def test_divisor_identity(sieve_medium):
    """Test sum over d | n of Lambda(d) = log n."""
    report = divisor_identity_check(sieve_medium, 10**5)
    assert report.limit == 10**5
    assert report.passed
    assert report.max_deviation < 1e-9
    with pytest.raises(DomainError):
        divisor_identity_check(sieve_medium, 10**5 + 1)


def test_H_direct_against_sine_integral(sieve_medium):
    """Test H(T) against (2/pi) Si(pi c) up to the O(1/log T) term."""
    c = 0.5042
    logT = math.log(1e5)
    value = H_direct(sieve_medium, 1e5, c, logT)
    assert value == pytest.approx(2 / math.pi * sine_integral(math.pi * c), abs=0.1)


def test_H_direct_domain(sieve_small):
    """Test that x beyond T is rejected."""
    with pytest.raises(DomainError):
        H_direct(sieve_small, 1e4, 0.5, math.log(1e3))


def test_save_and_load_sieve(sieve_small, tmp_path):
    """Test that the cache file reproduces the table exactly."""
    path = save_sieve(sieve_small, tmp_path / "sieve.npz")
    loaded = load_sieve(path)
    assert loaded.limit == sieve_small.limit
    assert np.array_equal(loaded.mangoldt, sieve_small.mangoldt)
    assert np.array_equal(loaded.prime_powers, sieve_small.prime_powers)


def test_sieve_for_uses_cache(sieve_small, tmp_path, monkeypatch):
    """Test that a large enough cache is loaded instead of sieving."""
    path = save_sieve(sieve_small, tmp_path / "sieve.npz")
    monkeypatch.setattr(Config, "SIEVE_CACHE", str(path))
    assert sieve_for(5000).limit == 10**4
    assert sieve_for(20000).limit == 20000


def test_custom_scheme_validation():
    """Test that vanishing or short coefficient lists are rejected."""
    with pytest.raises(DomainError):
        CoefficientScheme.custom([0.0, 0.0])
    with pytest.raises(DomainError):
        CoefficientScheme.custom([1.0, 2.0]).coefficients(5)


def test_empirical_ratio_b1_only(sieve_small):
    """Test the collapsed chain for b = (1, 0, 0, ...)."""
    T = 1e4
    run = empirical_ratio(sieve_small, T, 0.0, 0.5042, CoefficientScheme.b1_only(10**4))
    assert run.S == 0.0
    assert run.S2 == 0.0
    assert run.norm == 1.0
    assert run.ratio == 0.0
    assert run.S1 == pytest.approx(H_direct(sieve_small, T, 0.5042, math.log(T)), abs=1e-15)
    audit = chain_audit(run, make_params(0.5042, 0.476))
    assert audit.passed


def test_chain_audit_exact_links(sieve_small):
    """Test that the unconditional links hold for b_k = 1."""
    run = empirical_ratio(sieve_small, 1e4, 0.0, 0.5042, CoefficientScheme.ones())
    audit = chain_audit(run, make_params(0.5042, 0.476))
    for name in ("i", "ii", "v"):
        link = audit.link(name)
        assert link.exact
        assert link.passed
    assert audit.link("iv").passed
    assert audit.passed
    assert audit.slack > 0.0
    assert audit.link("iii").details["max_abs_error"] > 0.0


def test_cgg_s1_bound_dominates(sieve_small):
    """Test that S1 never exceeds its cruder estimate."""
    scheme = CoefficientScheme.ones()
    run = empirical_ratio(sieve_small, 1e4, 0.1, 0.5, scheme)
    assert run.S1 <= cgg_s1_bound(sieve_small, 1e4, 0.1, 0.5, scheme)


def test_link_iv_slack_shrinks_with_T(sieve_small, sieve_medium):
    """Test that the O(1/log T) slack is smaller at T = 10^5 than at 10^4."""
    params = make_params(0.5042, 0.476)
    small = chain_audit(empirical_ratio(sieve_small, 1e4, 0.0, 0.5042, CoefficientScheme.ones()), params)
    medium = chain_audit(empirical_ratio(sieve_medium, 1e5, 0.0, 0.5042, CoefficientScheme.ones()), params)
    assert medium.slack < small.slack


def test_chain_audit_parameter_mismatch(sieve_small):
    """Test that the audit refuses parameters from another run."""
    run = empirical_ratio(sieve_small, 1e4, 0.0, 0.5042, CoefficientScheme.ones())
    with pytest.raises(DomainError):
        chain_audit(run, make_params(0.5, 0.476))


def test_empirical_ratio_beyond_sieve(sieve_small):
    """Test that y above the sieve limit is rejected."""
    with pytest.raises(DomainError):
        empirical_ratio(sieve_small, 1e5, 0.0, 0.5, CoefficientScheme.ones())


def test_chebyshev_L_bounded_remainder(sieve_large):
    """Test |L(x) - log x| <= 2 for every x in [2, 10^6]."""
    n = np.arange(2, sieve_large.limit + 1, dtype=np.float64)
    L = sieve_large.prefix_L[2:]
    # L is constant on [n, n + 1), so both ends of each step bound the remainder
    assert np.max(np.abs(L - np.log(n))) <= 2.0
    assert np.max(np.abs(L[:-1] - np.log(n[1:]))) <= 2.0


ALPHA_BETA_PAIRS = [(0.5, 0.5), (1 / (4 * 0.476), 0.476)]


@pytest.mark.parametrize("T", [1e3, 1e4])
@pytest.mark.parametrize("alpha,beta", ALPHA_BETA_PAIRS)
def test_chain_audit_scales_and_splits(sieve_small, T, alpha, beta):
    """Test the exact links at T in {10^3, 10^4} for both AM-GM splits."""
    params = make_params(0.5042, beta)
    assert params.alpha == pytest.approx(alpha)
    run = empirical_ratio(sieve_small, T, 0.0, 0.5042, CoefficientScheme.ones())
    audit = chain_audit(run, params)
    assert all(audit.link(name).passed for name in ("i", "ii", "v"))
    assert audit.passed


@pytest.mark.parametrize("T", [1e3, 1e4])
def test_link_i_is_equality_for_equal_split(sieve_small, T):
    """Test that alpha = beta = 1/2 with b_k = 1 makes link (i) an equality."""
    run = empirical_ratio(sieve_small, T, 0.0, 0.5042, CoefficientScheme.ones())
    link = chain_audit(run, make_params(0.5042, 0.5)).link("i")
    assert abs(link.margin) <= 1e-12 * max(abs(link.lhs), abs(link.rhs))


@pytest.mark.parametrize("alpha,beta", ALPHA_BETA_PAIRS)
def test_link_iv_slack_shrinks_from_thousand(sieve_small, alpha, beta):
    """Test that the slack at T = 10^4 is smaller than at T = 10^3."""
    params = make_params(0.5042, beta)
    slacks = [
        chain_audit(empirical_ratio(sieve_small, T, 0.0, 0.5042, CoefficientScheme.ones()), params).slack
        for T in (1e3, 1e4)
    ]
    assert slacks[1] < slacks[0]
