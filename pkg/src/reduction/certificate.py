"""Independent replay of cobordism certificates."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional

from src.errors import FixedPointDataError
from src.fpdata import divide_weights, overall_gcd
from src.generators import generate
from src.models.fixed_point import FixedPointData
from src.models.reduction import CobordismCertificate, ReductionStep
from src.reduction.operations import apply_operation
from src.validation import validate_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateAudit:
    ok: bool
    message: str
    failed_step: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def _generator_mismatch(step: ReductionStep) -> Optional[str]:
    try:
        summand = generate(step.generator)
    except (FixedPointDataError, TypeError) as exc:
        return f"generator {step.generator} cannot be built: {exc}"
    glued = [point.flipped() for point in step.removed]
    if not summand.contains_all(glued):
        return f"generator {step.generator} does not contain the mirror of the removed points"
    if summand.without(glued) != FixedPointData.of(step.added):
        return f"added points differ from the rest of generator {step.generator}"
    return None


def audit_certificate(cert: CobordismCertificate, validate_intermediate: bool = True) -> CertificateAudit:
    """Replay every step with `apply_operation` and report the first failure."""

    divisor = cert.effectiveness_divisor
    if divisor < 1:
        return CertificateAudit(False, f"divisor must be positive, got {divisor}")
    state = cert.initial
    if state:
        if overall_gcd(state) % divisor:
            return CertificateAudit(False, f"divisor {divisor} does not divide every weight")
        state = divide_weights(state, divisor)
    if validate_intermediate and not validate_all(state).overall:
        return CertificateAudit(False, "initial data fails validation", 0)

    for index, step in enumerate(cert.steps, start=1):
        mismatch = _generator_mismatch(step)
        if mismatch:
            return CertificateAudit(False, f"step {index}: {mismatch}", index)
        try:
            state = apply_operation(state, step)
        except FixedPointDataError as exc:
            return CertificateAudit(False, f"step {index}: {exc}", index)
        if validate_intermediate:
            report = validate_all(state)
            if not report.overall:
                failed = ", ".join(check.name for check in report.failures)
                return CertificateAudit(False, f"step {index}: result fails {failed}", index)

    if state:
        return CertificateAudit(False, f"{len(state)} fixed points remain after the last step")
    return CertificateAudit(True, f"{len(cert.steps)} steps replay to the empty set")


def verify_certificate(cert: CobordismCertificate, validate_intermediate: bool = True) -> bool:
    audit = audit_certificate(cert, validate_intermediate=validate_intermediate)
    if not audit.ok:
        logger.warning("Certificate rejected: %s", audit.message)
    return audit.ok


def summarize_certificate(cert: CobordismCertificate) -> Dict[str, int]:
    """Number of summands per generator family, reversed ones prefixed with '~'."""

    tally = Counter(
        ("~" if step.generator.reversed else "") + step.generator.family.value for step in cert.steps
    )
    return dict(sorted(tally.items()))
