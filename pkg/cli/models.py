# CLI Models
"""Pydantic models for run configuration and command output."""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Command = Literal["critical-c", "scan", "verify", "large-gaps", "oracle", "reproduce"]
OutputFormat = Literal["human", "json", "csv"]


class RunConfig(BaseModel):
    """Resolved flags and environment overrides for one command."""

    model_config = ConfigDict(frozen=True)

    command: Command
    tol_c: float = Field(..., gt=0.0, description="Bisection width in c")
    tol_phi: float = Field(..., gt=0.0, description="Bisection width in phi0")
    tol_phi_high: float = Field(..., gt=0.0, description="phi0 width in high-precision mode")
    tol_beta: float = Field(..., gt=0.0, description="Golden-section width in beta")
    tol_threshold: float = Field(..., gt=0.0, description="Bisection width for large-gap thresholds")
    tol_quad: float = Field(..., gt=0.0, description="Absolute quadrature tolerance")
    quad_max_depth: int = Field(..., ge=1)
    beta_grid: int = Field(..., ge=2, description="Coarse beta grid size")
    verify_grid: int = Field(..., ge=2, description="Dense phi grid size")
    output: OutputFormat = "human"
    output_path: Optional[str] = None
    high_precision: bool = False
    quiet: bool = False

    @property
    def phi_tol(self) -> float:
        return self.tol_phi_high if self.high_precision else self.tol_phi


class ReproduceRow(BaseModel):
    """Computed value against a published constant."""

    model_config = ConfigDict(populate_by_name=True)

    constant: str
    computed: float
    reference: float
    tolerance: float
    passed: bool = Field(..., alias="pass")


class CommandReport(BaseModel):
    """Result document shared by every command and every output format."""

    command: Command
    passed: bool
    summary: Dict[str, Any] = Field(default_factory=dict)
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
