from .certificate import CertificateAudit, audit_certificate, summarize_certificate, verify_certificate
from .operations import apply_operation, build_step, check_side_conditions, generator_for
from .partners import find_partner
from .reducer import choose_step, reduce_once, reduce_to_empty, select_top_point

__all__ = [
    "CertificateAudit",
    "apply_operation",
    "audit_certificate",
    "build_step",
    "check_side_conditions",
    "choose_step",
    "find_partner",
    "generator_for",
    "reduce_once",
    "reduce_to_empty",
    "select_top_point",
    "summarize_certificate",
    "verify_certificate",
]
