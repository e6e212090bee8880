"""Shared dataclasses and type definitions for fixed point data tooling."""

from .fixed_point import FixedPoint, FixedPointData, Sign, make_fixed_point
from .reduction import (
    CobordismCertificate,
    GeneratorFamily,
    GeneratorLabel,
    OperationKind,
    PartnerCase,
    PartnerKind,
    ReductionStep,
)
from .report import NOT_APPLICABLE, CheckResult, ValidationReport

__all__ = [
    "FixedPoint",
    "FixedPointData",
    "Sign",
    "make_fixed_point",
    "CobordismCertificate",
    "GeneratorFamily",
    "GeneratorLabel",
    "OperationKind",
    "PartnerCase",
    "PartnerKind",
    "ReductionStep",
    "NOT_APPLICABLE",
    "CheckResult",
    "ValidationReport",
]
