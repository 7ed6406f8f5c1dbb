"""
Models for shift-plethystic substitution.
"""

from fractions import Fraction

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, model_validator

from ncseries.models.series import NCSeries


class PlethysmOperand(BaseModel):
    """A series R with <R, 1> = 0, the right-hand side of T o_s R."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    series: NCSeries

    @model_validator(mode='after')
    def validate_constant_term(self) -> Self:
        """Validate that the series has zero constant term."""
        assert not self.series.constant_term, (
            f"plethysm operand needs <R, 1> = 0, got {self.series.constant_term}"
        )
        return self

    @property
    def alpha(self) -> Fraction:
        """<R, X0>."""
        return self.series.coeff((0,))

    @property
    def invertible(self) -> bool:
        return bool(self.alpha)

    @property
    def tail(self) -> NCSeries:
        """R+ = R - alpha X0."""
        return self.series - NCSeries.letter(0, self.series.context, self.alpha)
