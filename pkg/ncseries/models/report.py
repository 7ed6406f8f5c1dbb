"""
Models for runs and verification reports.

This module defines the pydantic models shared by the identity checkers,
the concurrent verifier and the command line: truncation bounds, the
validated run configuration and the per-identity report.
"""

from typing import Dict, List, Literal, Optional

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ncseries.models.series import TruncationContext


class Bounds(BaseModel):
    """Truncation orders for a run: (L, W) for series and (N, W) for q-polynomials."""

    model_config = ConfigDict(frozen=True)

    max_len: int = 6
    max_weight: int = 15
    max_z: int = 8
    max_q: int = 30

    @model_validator(mode='after')
    def validate_bounds(self) -> Self:
        """Validate that every bound is nonnegative."""
        for name in ("max_len", "max_weight", "max_z", "max_q"):
            value = getattr(self, name)
            assert value >= 0, f"{name} must be nonnegative, got {value}"
        return self

    @property
    def context(self) -> TruncationContext:
        return TruncationContext(max_len=self.max_len, max_weight=self.max_weight)


class RunConfig(BaseModel):
    """A fully resolved command invocation."""

    command: str
    bounds: Bounds = Field(default_factory=Bounds)
    format: Literal["text", "json"] = "text"
    seed: int = 2024

    @model_validator(mode='after')
    def validate_command(self) -> Self:
        """Validate that a command was named."""
        assert self.command, "A command name is required"
        return self


class Discrepancy(BaseModel):
    """The first place where the two sides of an identity disagree."""

    location: str
    expected: str
    actual: str


class IdentityReport(BaseModel):
    """Outcome of one identity checker."""

    identity: str
    passed: bool
    orders: Dict[str, int] = Field(default_factory=dict)
    checks: List[str] = Field(default_factory=list)
    discrepancy: Optional[Discrepancy] = None
    detail: str = ""

    @model_validator(mode='after')
    def validate_outcome(self) -> Self:
        """A passing report cannot carry a discrepancy."""
        assert not (self.passed and self.discrepancy), "A passing report cannot carry a discrepancy"
        return self
