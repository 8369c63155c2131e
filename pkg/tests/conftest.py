# Test Configuration
"""Pytest configuration and fixtures for testing."""
import pytest

from gapbound.config import Config
from gapbound.models import make_params
from gapbound.sieve_oracle import build_sieve


@pytest.fixture(scope="session")
def sieve_small():
    """Sieve table up to 10^4."""
    return build_sieve(10**4)


@pytest.fixture(scope="session")
def sieve_medium():
    """Sieve table up to 10^5."""
    return build_sieve(10**5)


@pytest.fixture
def witness_params():
    """The published witness (c, beta) = (0.5042, 0.476)."""
    return make_params(0.5042, 0.476)


@pytest.fixture
def clean_env(monkeypatch):
    """Drop every GAPBOUND_ override and restore Config afterwards."""
    import os

    for name in list(os.environ):
        if name.startswith("GAPBOUND_"):
            monkeypatch.delenv(name)
    Config.refresh()
    yield monkeypatch
    monkeypatch.undo()
    Config.refresh()


@pytest.fixture(scope="session")
def sieve_large():
    """Sieve table up to 10^6."""
    return build_sieve(10**6)
