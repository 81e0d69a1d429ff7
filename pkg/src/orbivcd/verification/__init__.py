from .checks import (
    check_dichotomy,
    check_eq5_consistency,
    check_gendec,
    check_prop4,
    find_vcd_exceptions,
    verify_claim_uno,
    verify_prop5,
)
from .report import (
    certificate_summary,
    certificates_table,
    format_certificates,
    parse_certificate,
    read_certificates,
    recheck,
)
from .rules import CertificateFormatError, evaluate, issue, recheck_certificate

__all__ = [
    "CertificateFormatError",
    "certificate_summary",
    "certificates_table",
    "check_dichotomy",
    "check_eq5_consistency",
    "check_gendec",
    "check_prop4",
    "evaluate",
    "find_vcd_exceptions",
    "format_certificates",
    "issue",
    "parse_certificate",
    "read_certificates",
    "recheck",
    "recheck_certificate",
    "verify_claim_uno",
    "verify_prop5",
]
