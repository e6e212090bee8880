from .certificate_file import (
    CERTIFICATE_VERSION,
    CertificateDocument,
    dump_certificate,
    load_certificate,
)
from .data_file import parse_complex_data, parse_data, parse_pair, parse_point, print_data

__all__ = [
    "CERTIFICATE_VERSION",
    "CertificateDocument",
    "dump_certificate",
    "load_certificate",
    "parse_complex_data",
    "parse_data",
    "parse_pair",
    "parse_point",
    "print_data",
]
