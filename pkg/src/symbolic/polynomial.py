"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from src.errors import NonPositiveWeightError

NEG_INFINITY = float("-inf")


def _as_object_array(coefficients: Iterable[int]) -> np.ndarray:
    return np.array([int(c) for c in coefficients], dtype=object)


def _trim(coefficients: Sequence[int]) -> Tuple[int, ...]:
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coefficients[:end])


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in t stored as (c0, c1, ...), trailing zeros trimmed.

    The zero polynomial is the empty tuple and has degree -inf.
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(tuple(self.coefficients)))

    @classmethod
    def from_array(cls, values: np.ndarray) -> "IntPolynomial":
        return cls(tuple(values.tolist()))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coefficients

    def to_array(self, length: int | None = None) -> np.ndarray:
        size = len(self.coefficients) if length is None else length
        values = np.zeros(size, dtype=object)
        values[: len(self.coefficients)] = self.coefficients[:size]
        return values

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, -other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coefficients))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for degree, coefficient in enumerate(self.coefficients):
            if coefficient == 0:
                continue
            if degree == 0:
                body = str(abs(coefficient))
            else:
                power = "t" if degree == 1 else f"t^{degree}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            sign = "-" if coefficient < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    size = max(len(a.coefficients), len(b.coefficients))
    return IntPolynomial.from_array(a.to_array(size) + b.to_array(size))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    if len(a.coefficients) < len(b.coefficients):
        a, b = b, a
    right = b.to_array()
    result = np.zeros(len(a.coefficients) + len(b.coefficients) - 1, dtype=object)
    for shift, coefficient in enumerate(a.coefficients):
        if coefficient:
            result[shift : shift + len(right)] += coefficient * right
    return IntPolynomial.from_array(result)


def _require_weight(weight: int) -> None:
    if weight < 1:
        raise NonPositiveWeightError(f"exponent weight must be positive, got {weight}")


def one_plus_t_pow(weight: int) -> IntPolynomial:
    _require_weight(weight)
    return IntPolynomial.monomial(weight) + ONE


def one_minus_t_pow(weight: int) -> IntPolynomial:
    _require_weight(weight)
    return ONE - IntPolynomial.monomial(weight)


def multiply_one_plus(values: np.ndarray, weight: int) -> np.ndarray:
    """Coefficients of values * (1 + t^weight); the array grows by `weight`."""

    result = np.zeros(len(values) + weight, dtype=object)
    result[: len(values)] += values
    result[weight:] += values
    return result


def multiply_one_minus(values: np.ndarray, weight: int) -> np.ndarray:
    result = np.zeros(len(values) + weight, dtype=object)
    result[: len(values)] += values
    result[weight:] -= values
    return result


def divide_one_minus(values: np.ndarray, weight: int) -> np.ndarray:
    """Exact quotient by (1 - t^weight).

    Uses q[k] = f[k] + q[k - weight] block by block; the caller guarantees
    divisibility, so the top `weight` coefficients of the quotient vanish.
    """

    quotient = np.array(values, dtype=object, copy=True)
    for start in range(weight, len(quotient), weight):
        stop = min(start + weight, len(quotient))
        quotient[start:stop] += quotient[start - weight : stop - weight]
    length = max(len(quotient) - weight, 0)
    return quotient[:length]


def product_one_minus(weights: Iterable[int]) -> np.ndarray:
    values = np.ones(1, dtype=object)
    for weight in weights:
        values = multiply_one_minus(values, weight)
    return values
