# Environment Configuration
"""Configuration loader for environment variables."""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _float(name: str, default: str) -> float:
    return float(os.getenv(f"GAPBOUND_{name}", default))


def _int(name: str, default: str) -> int:
    return int(float(os.getenv(f"GAPBOUND_{name}", default)))


class Config:
    """Configuration class for the gap-bound reproducer.

    Every value can be overridden with a ``GAPBOUND_<NAME>`` environment
    variable; command-line flags take precedence over both.
    """

    # Root finding tolerances
    TOL_PHI = _float("TOL_PHI", "1e-6")
    TOL_PHI_HIGH = _float("TOL_PHI_HIGH", "1e-12")
    TOL_C = _float("TOL_C", "1e-5")
    TOL_BETA = _float("TOL_BETA", "1e-6")
    TOL_THRESHOLD = _float("TOL_THRESHOLD", "1e-6")

    # Quadrature
    TOL_QUAD = _float("TOL_QUAD", "1e-12")
    QUAD_MAX_DEPTH = _int("QUAD_MAX_DEPTH", "60")

    # Beta search
    BETA_MIN = _float("BETA_MIN", "0.3")
    BETA_MAX = _float("BETA_MAX", "0.5")
    BETA_GRID = _int("BETA_GRID", "200")

    # Grid certification
    VERIFY_GRID = _int("VERIFY_GRID", "100000")

    # Sieve oracle
    ORACLE_T_EXP = _int("ORACLE_T_EXP", "4")
    SIEVE_MAX = _int("SIEVE_MAX", "10000000")
    SIEVE_CACHE = os.getenv("GAPBOUND_SIEVE_CACHE", "")

    @classmethod
    def refresh(cls) -> None:
        """Re-read every value from the current environment."""
        cls.TOL_PHI = _float("TOL_PHI", "1e-6")
        cls.TOL_PHI_HIGH = _float("TOL_PHI_HIGH", "1e-12")
        cls.TOL_C = _float("TOL_C", "1e-5")
        cls.TOL_BETA = _float("TOL_BETA", "1e-6")
        cls.TOL_THRESHOLD = _float("TOL_THRESHOLD", "1e-6")
        cls.TOL_QUAD = _float("TOL_QUAD", "1e-12")
        cls.QUAD_MAX_DEPTH = _int("QUAD_MAX_DEPTH", "60")
        cls.BETA_MIN = _float("BETA_MIN", "0.3")
        cls.BETA_MAX = _float("BETA_MAX", "0.5")
        cls.BETA_GRID = _int("BETA_GRID", "200")
        cls.VERIFY_GRID = _int("VERIFY_GRID", "100000")
        cls.ORACLE_T_EXP = _int("ORACLE_T_EXP", "4")
        cls.SIEVE_MAX = _int("SIEVE_MAX", "10000000")
        cls.SIEVE_CACHE = os.getenv("GAPBOUND_SIEVE_CACHE", "")

    @classmethod
    def validate(cls) -> list[str]:
        """Validate configuration values."""
        errors = []
        for name in ("TOL_PHI", "TOL_PHI_HIGH", "TOL_C", "TOL_BETA", "TOL_THRESHOLD", "TOL_QUAD"):
            if not getattr(cls, name) > 0:
                errors.append(f"GAPBOUND_{name} must be positive")
        if cls.QUAD_MAX_DEPTH < 1:
            errors.append("GAPBOUND_QUAD_MAX_DEPTH must be at least 1")
        if cls.BETA_GRID < 2:
            errors.append("GAPBOUND_BETA_GRID must be at least 2")
        if cls.VERIFY_GRID < 2:
            errors.append("GAPBOUND_VERIFY_GRID must be at least 2")
        if not 0 < cls.BETA_MIN < cls.BETA_MAX <= 0.5:
            errors.append("GAPBOUND_BETA_MIN/BETA_MAX must satisfy 0 < min < max <= 0.5")
        if cls.SIEVE_MAX < 2:
            errors.append("GAPBOUND_SIEVE_MAX must be at least 2")
        return errors


def get_config() -> Config:
    """Get the configuration instance."""
    return Config()
