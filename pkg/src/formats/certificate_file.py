"""JSON certificate documents validated with pydantic."""

from __future__ import annotations

from typing import List, Literal

from pydantic import BaseModel, Field, PositiveInt, ValidationError, field_validator

from src.errors import CertificateFormatError, FixedPointDataError
from src.formats.data_file import parse_point
from src.models.fixed_point import FixedPointData, Sign
from src.models.reduction import (
    CobordismCertificate,
    GeneratorFamily,
    GeneratorLabel,
    OperationKind,
    ReductionStep,
)

CERTIFICATE_VERSION = 1


def _check_points(values: List[str]) -> List[str]:
    for value in values:
        try:
            parse_point(value)
        except FixedPointDataError as exc:
            raise ValueError(str(exc)) from exc
    return values


class GeneratorDocument(BaseModel):
    family: GeneratorFamily
    params: List[int]
    reversed: bool = False


class StepDocument(BaseModel):
    kind: OperationKind
    sign: Literal["+", "-"]
    params: List[int]
    removed: List[str]
    added: List[str] = Field(default_factory=list)
    generator: GeneratorDocument

    @field_validator("removed", "added")
    @classmethod
    def validate_points(cls, values: List[str]) -> List[str]:
        return _check_points(values)


class CertificateDocument(BaseModel):
    version: int = CERTIFICATE_VERSION
    initial: List[str]
    divisor: PositiveInt = 1
    steps: List[StepDocument] = Field(default_factory=list)

    @field_validator("initial")
    @classmethod
    def validate_initial(cls, values: List[str]) -> List[str]:
        return _check_points(values)


def certificate_to_document(cert: CobordismCertificate) -> CertificateDocument:
    return CertificateDocument(
        version=CERTIFICATE_VERSION,
        initial=[str(point) for point in cert.initial],
        divisor=cert.effectiveness_divisor,
        steps=[
            StepDocument(
                kind=step.kind,
                sign=step.sign.symbol,
                params=list(step.params),
                removed=[str(point) for point in step.removed],
                added=[str(point) for point in step.added],
                generator=GeneratorDocument(
                    family=step.generator.family,
                    params=list(step.generator.params),
                    reversed=step.generator.reversed,
                ),
            )
            for step in cert.steps
        ],
    )


def document_to_certificate(document: CertificateDocument) -> CobordismCertificate:
    steps = tuple(
        ReductionStep(
            kind=step.kind,
            sign=Sign.from_symbol(step.sign),
            params=tuple(step.params),
            removed=tuple(parse_point(value) for value in step.removed),
            added=tuple(parse_point(value) for value in step.added),
            generator=GeneratorLabel(step.generator.family, tuple(step.generator.params), step.generator.reversed),
        )
        for step in document.steps
    )
    return CobordismCertificate(
        initial=FixedPointData.of(parse_point(value) for value in document.initial),
        steps=steps,
        effectiveness_divisor=document.divisor,
    )


def dump_certificate(cert: CobordismCertificate) -> str:
    return certificate_to_document(cert).model_dump_json(indent=2) + "\n"


def load_certificate(text: str, expected_version: int = CERTIFICATE_VERSION) -> CobordismCertificate:
    """Parse a certificate document; malformed JSON or schema errors raise CertificateFormatError."""

    try:
        document = CertificateDocument.model_validate_json(text)
    except ValidationError as exc:
        raise CertificateFormatError(f"invalid certificate: {exc}") from exc
    if document.version != expected_version:
        raise CertificateFormatError(
            f"unsupported certificate version {document.version}, expected {expected_version}"
        )
    return document_to_certificate(document)
