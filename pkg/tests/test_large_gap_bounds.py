# Large Gap Bound Tests
"""Tests for the large-gap lower bounds and their thresholds."""
import math

import numpy as np
import pytest
from scipy.special import sici

from gapbound.errors import BracketError, DomainError
from gapbound.large_gap_bounds import find_large_gap_threshold, h_lower
from gapbound.models import LargeGapVariant


def test_h_lower_small_c_closed_form():
    """Test v1 at c <= 1, where the integral is Si(pi c)."""
    c = 0.5
    expected = c - 2 * math.sqrt(c / math.pi * sici(math.pi * c)[0])
    assert h_lower(c, LargeGapVariant.V1) == pytest.approx(expected, abs=1e-12)


def test_h_lower_v2_closed_form():
    """Test v2 against Si(2x) - sin(x)^2 / x with x = pi c."""
    c = 3.0
    x = math.pi * c
    integral = sici(2 * x)[0] - math.sin(x) ** 2 / x
    expected = c - 2 * math.sqrt(c / math.pi * integral)
    assert h_lower(c, "v2") == pytest.approx(expected, abs=1e-10)


def test_h_lower_rejects_non_positive_c():
    """Test that c <= 0 is a domain error."""
    with pytest.raises(DomainError):
        h_lower(0.0, LargeGapVariant.V1)


def test_threshold_v1():
    """Test the first threshold 5.5602."""
    threshold = find_large_gap_threshold(LargeGapVariant.V1)
    assert threshold == pytest.approx(5.5602, abs=1e-4)
    assert h_lower(threshold, LargeGapVariant.V1) > 1.0
    assert h_lower(threshold - 1e-3, LargeGapVariant.V1) < 1.0


def test_threshold_v2():
    """Test the second threshold 3.6747."""
    threshold = find_large_gap_threshold(LargeGapVariant.V2)
    assert threshold == pytest.approx(3.6747, abs=1e-4)
    assert h_lower(threshold, LargeGapVariant.V2) > 1.0


def test_v2_threshold_is_smaller():
    """Test that the squared-sinc variant gives the stronger threshold."""
    v1 = find_large_gap_threshold(LargeGapVariant.V1, tol=1e-4)
    v2 = find_large_gap_threshold(LargeGapVariant.V2, tol=1e-4)
    assert v2 < v1


def test_threshold_bracket_error():
    """Test that [1, 2] does not straddle h_lower = 1 for v2."""
    with pytest.raises(BracketError) as excinfo:
        find_large_gap_threshold(LargeGapVariant.V2, bracket=(1.0, 2.0))
    assert excinfo.value.low_value < 1.0
    assert excinfo.value.high_value < 1.0


def test_threshold_invalid_bracket():
    """Test that a reversed bracket is a domain error."""
    with pytest.raises(DomainError):
        find_large_gap_threshold(LargeGapVariant.V1, bracket=(7.0, 4.0))


@pytest.mark.parametrize("variant", [LargeGapVariant.V1, LargeGapVariant.V2])
def test_h_lower_negative_for_small_c(variant):
    """Test that h_lower(0.1) < 0 for both variants."""
    assert h_lower(0.1, variant) < 0.0


@pytest.mark.parametrize("variant", [LargeGapVariant.V1, LargeGapVariant.V2])
def test_h_lower_below_c(variant):
    """Test h_lower(c) < c on a grid of c values."""
    for c in np.linspace(0.1, 8.0, 40):
        assert h_lower(float(c), variant) < c


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_h_lower_v1_continuous_across_kinks(k):
    """Test that v1 does not jump when the number of kinks changes at c = k."""
    below = h_lower(k - 1e-9, LargeGapVariant.V1)
    above = h_lower(k + 1e-9, LargeGapVariant.V1)
    assert abs(above - below) < 1e-7
