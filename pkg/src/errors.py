"""Exception hierarchy shared by every fixed point data module."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from src.models.report import ValidationReport


class FixedPointDataError(ValueError):
    """Base class for all domain errors."""


class NonPositiveWeightError(FixedPointDataError):
    pass


class ZeroWeightError(FixedPointDataError):
    pass


class EmptyDataError(FixedPointDataError):
    pass


class ParameterOrderError(FixedPointDataError):
    pass


class DegenerateParametersError(FixedPointDataError):
    pass


class PairNotPresentError(FixedPointDataError):
    pass


class WeightMismatchError(FixedPointDataError):
    pass


class SignMismatchError(FixedPointDataError):
    pass


class NotApplicableError(FixedPointDataError):
    """An operation's removed points or side conditions do not match the data."""


class NotRealizableError(FixedPointDataError):
    """The reduction strategy found no admissible step for the data."""


class MaxStepsExceededError(FixedPointDataError):
    pass


class TruncationMismatchError(FixedPointDataError):
    pass


class InvalidInputError(FixedPointDataError):
    """Input rejected by the validator before any reduction step."""

    def __init__(self, message: str, report: Optional["ValidationReport"] = None) -> None:
        super().__init__(message)
        self.report = report


class ParseError(FixedPointDataError):
    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class CertificateFormatError(FixedPointDataError):
    pass
