"""Power series in t truncated at a fixed degree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.errors import NonPositiveWeightError, TruncationMismatchError


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of t^0 .. t^N; everything above N is discarded."""

    coefficients: Tuple[int, ...]
    truncation_degree: int

    def __post_init__(self) -> None:
        if self.truncation_degree < 0:
            raise ValueError("truncation degree must be non-negative")
        values = tuple(int(c) for c in self.coefficients[: self.truncation_degree + 1])
        padding = (0,) * (self.truncation_degree + 1 - len(values))
        object.__setattr__(self, "coefficients", values + padding)

    @classmethod
    def zero(cls, truncation_degree: int) -> "TruncatedSeries":
        return cls((), truncation_degree)

    @classmethod
    def one(cls, truncation_degree: int) -> "TruncatedSeries":
        return cls((1,), truncation_degree)

    @classmethod
    def from_array(cls, values: np.ndarray, truncation_degree: int) -> "TruncatedSeries":
        return cls(tuple(values.tolist()), truncation_degree)

    @classmethod
    def geometric_ratio(cls, weight: int, truncation_degree: int) -> "TruncatedSeries":
        """(1 + t^w) / (1 - t^w) = 1 + 2 t^w + 2 t^2w + ..."""

        if weight < 1:
            raise NonPositiveWeightError(f"weight must be positive, got {weight}")
        values = np.zeros(truncation_degree + 1, dtype=object)
        values[weight::weight] = 2
        values[0] = 1
        return cls.from_array(values, truncation_degree)

    def to_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=object)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.truncation_degree != other.truncation_degree:
            raise TruncationMismatchError(
                f"cannot combine series truncated at {self.truncation_degree} and {other.truncation_degree}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries.from_array(self.to_array() + other.to_array(), self.truncation_degree)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients), self.truncation_degree)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scaled(self, factor: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * factor for c in self.coefficients), self.truncation_degree)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        size = self.truncation_degree + 1
        right = other.to_array()
        result = np.zeros(size, dtype=object)
        for shift, coefficient in enumerate(self.coefficients):
            if coefficient:
                result[shift:] += coefficient * right[: size - shift]
        return TruncatedSeries.from_array(result, self.truncation_degree)
