"""Dataclasses describing reduction steps and cobordism certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from src.models.fixed_point import FixedPoint, FixedPointData, Sign


class OperationKind(str, Enum):
    OP1 = "OP1"
    OP2 = "OP2"
    OP3 = "OP3"
    OP3P = "OP3P"
    OP4 = "OP4"
    OP4P = "OP4P"
    OP5 = "OP5"

    @property
    def added_count(self) -> int:
        return _ADDED_COUNTS[self]


_ADDED_COUNTS = {
    OperationKind.OP1: 0,
    OperationKind.OP2: 2,
    OperationKind.OP3: 4,
    OperationKind.OP3P: 4,
    OperationKind.OP4: 4,
    OperationKind.OP4P: 4,
    OperationKind.OP5: 8,
}


class GeneratorFamily(str, Enum):
    S6 = "S6"
    CP3 = "CP3"
    Z1 = "Z1"
    Z2 = "Z2"
    Z2SUM = "Z2SUM"


@dataclass(frozen=True)
class GeneratorLabel:
    """Model manifold a step connect-sums with.

    Parameters follow the generator constructors: S6/CP3 take (a, b, c),
    Z1/Z2 take the (a, b, c) of Z_n(a, b, c) with n = 1 or 2, Z2SUM takes (a, e).
    """

    family: GeneratorFamily
    params: Tuple[int, ...]
    reversed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", GeneratorFamily(self.family))
        object.__setattr__(self, "params", tuple(int(value) for value in self.params))

    def scaled(self, factor: int) -> "GeneratorLabel":
        return GeneratorLabel(self.family, tuple(value * factor for value in self.params), self.reversed)

    def __str__(self) -> str:
        args = ",".join(str(value) for value in self.params)
        bar = "~" if self.reversed else ""
        return f"{bar}{self.family.value}({args})"


@dataclass(frozen=True)
class ReductionStep:
    """One application of an operation: remove two points, add the generator's rest."""

    kind: OperationKind
    sign: Sign
    params: Tuple[int, ...]
    removed: Tuple[FixedPoint, ...]
    added: Tuple[FixedPoint, ...]
    generator: GeneratorLabel

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", OperationKind(self.kind))
        object.__setattr__(self, "sign", Sign(self.sign))
        object.__setattr__(self, "params", tuple(int(value) for value in self.params))
        object.__setattr__(self, "removed", tuple(sorted(self.removed, key=FixedPoint.sort_key)))
        object.__setattr__(self, "added", tuple(sorted(self.added, key=FixedPoint.sort_key)))

    @property
    def top_weight(self) -> int:
        """The weight C every removed point carries and no added point reaches."""
        return self.params[-1]

    @property
    def size_change(self) -> int:
        return len(self.added) - len(self.removed)

    def scaled(self, factor: int) -> "ReductionStep":
        return ReductionStep(
            kind=self.kind,
            sign=self.sign,
            params=tuple(value * factor for value in self.params),
            removed=tuple(point.scaled(factor) for point in self.removed),
            added=tuple(point.scaled(factor) for point in self.added),
            generator=self.generator.scaled(factor),
        )

    def __str__(self) -> str:
        removed = ", ".join(f"{{{point}}}" for point in self.removed)
        added = ", ".join(f"{{{point}}}" for point in self.added) or "nothing"
        params = ",".join(str(value) for value in self.params)
        return f"{self.kind.value}({params}) with {self.generator}: remove {removed}; add {added}"


@dataclass(frozen=True)
class CobordismCertificate:
    """Initial data plus the ordered steps that empty it."""

    initial: FixedPointData
    steps: Tuple[ReductionStep, ...] = field(default_factory=tuple)
    effectiveness_divisor: int = 1

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def kinds(self) -> Tuple[OperationKind, ...]:
        return tuple(step.kind for step in self.steps)


class PartnerKind(str, Enum):
    SAME = "SAME"
    COMPLEMENT = "COMPLEMENT"
    MIXED = "MIXED"


@dataclass(frozen=True)
class PartnerCase:
    """Partner of a top-weight point, tagged with the matching formula.

    For MIXED partners `shared` is the weight both points keep and `complemented`
    is the weight of p whose complement l - w sits at the partner.
    """

    kind: PartnerKind
    partner: FixedPoint
    shared: Optional[int] = None
    complemented: Optional[int] = None
