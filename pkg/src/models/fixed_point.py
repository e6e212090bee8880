"""Dataclasses for the fixed point data of a circle action with isolated fixed points."""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, Iterable, Iterator, Tuple

from src.errors import NonPositiveWeightError, PairNotPresentError


class Sign(IntEnum):
    """Orientation sign of a fixed point."""

    PLUS = 1
    MINUS = -1

    def __neg__(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    @classmethod
    def from_symbol(cls, token: str) -> "Sign":
        if token == "+":
            return cls.PLUS
        if token == "-":
            return cls.MINUS
        raise ValueError(f"unknown sign token: {token!r}")


@dataclass(frozen=True)
class FixedPoint:
    """Sign plus the multiset of three weights, stored in descending order."""

    sign: Sign
    weights: Tuple[int, int, int]

    def __post_init__(self) -> None:
        weights = tuple(operator.index(w) for w in self.weights)
        if len(weights) != 3:
            raise ValueError(f"a fixed point carries exactly three weights, got {len(weights)}")
        if any(w < 1 for w in weights):
            raise NonPositiveWeightError(f"weights must be positive: {weights}")
        object.__setattr__(self, "sign", Sign(self.sign))
        object.__setattr__(self, "weights", tuple(sorted(weights, reverse=True)))

    @property
    def top(self) -> int:
        return self.weights[0]

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical order: + before -, then weights lexicographically descending."""
        return (0 if self.sign is Sign.PLUS else 1, tuple(-w for w in self.weights))

    def weights_first_key(self) -> Tuple[Tuple[int, ...], int]:
        return (tuple(-w for w in self.weights), 0 if self.sign is Sign.PLUS else 1)

    def weight_count(self, weight: int) -> int:
        return self.weights.count(weight)

    def flipped(self) -> "FixedPoint":
        return FixedPoint(-self.sign, self.weights)

    def scaled(self, factor: int) -> "FixedPoint":
        return FixedPoint(self.sign, tuple(w * factor for w in self.weights))

    def divided(self, divisor: int) -> "FixedPoint":
        return FixedPoint(self.sign, tuple(w // divisor for w in self.weights))

    def __str__(self) -> str:
        return " ".join([self.sign.symbol, *(str(w) for w in self.weights)])


def make_fixed_point(sign: Sign, w1: int, w2: int, w3: int) -> FixedPoint:
    """Build the canonical fixed point {sign, w1, w2, w3}."""

    return FixedPoint(sign, (w1, w2, w3))


@dataclass(frozen=True)
class FixedPointData:
    """Multiset of fixed points kept in canonical order."""

    points: Tuple[FixedPoint, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(sorted(self.points, key=FixedPoint.sort_key)))

    @classmethod
    def of(cls, points: Iterable[FixedPoint]) -> "FixedPointData":
        return cls(tuple(points))

    def __iter__(self) -> Iterator[FixedPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __bool__(self) -> bool:
        return bool(self.points)

    def counter(self) -> Counter:
        return Counter(self.points)

    def count(self, point: FixedPoint) -> int:
        return self.points.count(point)

    def contains_all(self, points: Iterable[FixedPoint]) -> bool:
        available = self.counter()
        needed = Counter(points)
        return all(available[point] >= amount for point, amount in needed.items())

    def without(self, points: Iterable[FixedPoint]) -> "FixedPointData":
        """Remove the given points, respecting multiplicity."""

        remaining = self.counter()
        for point in points:
            if remaining[point] <= 0:
                raise PairNotPresentError(f"fixed point {point} is not present")
            remaining[point] -= 1
        return FixedPointData(tuple(remaining.elements()))

    def with_points(self, points: Iterable[FixedPoint]) -> "FixedPointData":
        return FixedPointData(self.points + tuple(points))

    def weights(self) -> Iterator[int]:
        for point in self.points:
            yield from point.weights

    def net_counts(self) -> Dict[Tuple[int, int, int], int]:
        """Signed count per weight multiset; entries that cancel are dropped."""

        totals: Dict[Tuple[int, int, int], int] = {}
        for point in self.points:
            totals[point.weights] = totals.get(point.weights, 0) + int(point.sign)
        return {weights: total for weights, total in totals.items() if total}

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(str(point).split()) + "}" for point in self.points) + "}"
