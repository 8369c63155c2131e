# Domain Models
"""Pydantic models for bound parameters and numerical results."""
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from gapbound.config import Config
from gapbound.errors import DomainError


class QuadratureSpec(BaseModel):
    """Tolerance contract for every adaptive integral."""

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=1e-12, gt=0.0, description="Absolute error target")
    rel_tol: float = Field(default=0.0, ge=0.0, description="Relative error target")
    max_depth: int = Field(default=60, ge=1, description="Subinterval limit of the adaptive rule")

    @classmethod
    def default(cls) -> "QuadratureSpec":
        """Build the spec from the current configuration."""
        return make_model(cls, abs_tol=Config.TOL_QUAD, rel_tol=0.0, max_depth=Config.QUAD_MAX_DEPTH)


class BoundParams(BaseModel):
    """The tuple (c, beta, delta); alpha = 1/(4 beta) is derived, never stored."""

    model_config = ConfigDict(frozen=True)

    c: float = Field(..., gt=0.0, lt=1.0, description="Gap length as a multiple of the average spacing")
    beta: float = Field(..., gt=0.0, description="AM-GM weight on the |b_kn|^2 side")
    delta: float = Field(default=0.0, ge=0.0, lt=1.0, description="Shrinkage y = T^(1 - delta)")

    @property
    def alpha(self) -> float:
        return 1.0 / (4.0 * self.beta)

    @property
    def phi_max(self) -> float:
        """Right end of the admissible phi range."""
        return 1.0 - self.delta


class CriticalPoint(BaseModel):
    """Solution of sinc(pi c phi0) = 4 beta^2, or the tagged absence of one."""

    model_config = ConfigDict(frozen=True)

    phi0: float = Field(..., ge=0.0, le=1.0)
    residual: float = Field(..., ge=0.0)
    bracket: Tuple[float, float]
    exists: bool = True
    iterations: int = 0


class BoundCase(str, Enum):
    """Which AM-GM regime a parameter set falls into."""

    CASE1 = "case1"
    CASE2 = "case2"


class MaximizerKind(str, Enum):
    """Where the maximum of G over the phi range is attained."""

    INTERIOR = "interior"
    ENDPOINT_PHI0_ZERO = "endpoint_phi0_zero"
    ENDPOINT_PHI_ONE = "endpoint_phi_one"


class BoundEvaluation(BaseModel):
    """Maximum of G and the resulting upper bound for h(c)."""

    model_config = ConfigDict(frozen=True)

    params: BoundParams
    g_max: float
    h_upper: float
    maximizer: MaximizerKind
    phi_at_max: float
    case: BoundCase
    critical_point: Optional[CriticalPoint] = None
    has_interior: bool = False

    @model_validator(mode="after")
    def _check_sum(self) -> "BoundEvaluation":
        if self.h_upper != self.params.c + self.g_max:
            raise ValueError("h_upper must equal c + g_max")
        return self


class CTraceEntry(BaseModel):
    """One bisection step of the critical-c search."""

    c: float
    beta_star: float
    h_star: float
    certified: bool


class OptimizationResult(BaseModel):
    """Largest certified c with its (beta, phi, h) witness."""

    model_config = ConfigDict(frozen=True)

    c_star: float
    beta_star: float = Field(..., gt=0.0, lt=0.5)
    phi_star: float = Field(..., gt=0.0, lt=1.0)
    h_star: float = Field(..., lt=1.0 + 1e-12)
    beta_evals: int
    c_iterations: int
    trace: List[CTraceEntry] = Field(default_factory=list)


class VerificationReport(BaseModel):
    """Dense-grid certification of c + G(phi) < 1."""

    model_config = ConfigDict(frozen=True)

    params: BoundParams
    grid_size: int
    max_value: float
    phi_at_max: float
    sign_changes: int
    structure_ok: bool
    passed: bool
    warnings: List[str] = Field(default_factory=list)


class LargeGapVariant(str, Enum):
    """v1 uses |sin(pi c v)|/v on [0, 1]; v2 uses (sin v / v)^2 on [0, pi c]."""

    V1 = "v1"
    V2 = "v2"


class DivisorIdentityReport(BaseModel):
    """Exhaustive check of sum over d | n of Lambda(d) = log n."""

    limit: int
    max_deviation: float
    worst_n: int
    tolerance: float
    passed: bool


class AuditLink(BaseModel):
    """One inequality of the prime-sum chain."""

    name: str
    description: str
    lhs: float
    rhs: float
    margin: float
    exact: bool
    passed: bool
    details: Dict[str, float] = Field(default_factory=dict)


class ChainAudit(BaseModel):
    """Link-by-link audit of an empirical run against its bound parameters."""

    T: float
    c: float
    alpha: float
    beta: float
    ratio: float
    g_max: float
    slack: float
    links: List[AuditLink]
    passed: bool

    def link(self, name: str) -> AuditLink:
        """Get a link by name."""
        for item in self.links:
            if item.name == name:
                return item
        raise KeyError(name)


def make_model(model_cls, **fields):
    """Construct a model, reporting invariant violations as DomainError."""
    try:
        return model_cls(**fields)
    except ValidationError as exc:
        raise DomainError(f"invalid {model_cls.__name__}: {exc.errors()[0]['msg']}") from exc


def make_params(c: float, beta: float, delta: float = 0.0) -> BoundParams:
    """Build BoundParams, raising DomainError on an invalid tuple."""
    return make_model(BoundParams, c=c, beta=beta, delta=delta)
