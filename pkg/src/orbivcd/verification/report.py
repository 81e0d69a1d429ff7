import io
import json
import logging
from collections.abc import Iterable

import duckdb
import pyarrow as pa
import pyarrow.csv as pacsv

from ..models.certificate import Certificate
from .rules import CertificateFormatError, recheck_certificate

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")

CERTIFICATE_SCHEMA = pa.schema(
    [
        ("claim_id", pa.string()),
        ("subject", pa.string()),
        ("case_label", pa.string()),
        ("operands", pa.string()),
        ("verdict", pa.string()),
    ]
)


def certificates_table(certs: Iterable[Certificate]) -> pa.Table:
    return pa.Table.from_pylist([c.as_dict() for c in certs], schema=CERTIFICATE_SCHEMA)


def certificate_summary(certs: Iterable[Certificate]) -> list[tuple[str, str, int]]:
    """(claim_id, verdict, count) rows, ordered by claim and verdict."""
    table = certificates_table(certs)
    con = duckdb.connect()
    try:
        con.register("certificates", table)
        return con.execute(
            "SELECT claim_id, verdict, count(*) AS n FROM certificates "
            "GROUP BY claim_id, verdict ORDER BY claim_id, verdict"
        ).fetchall()
    finally:
        con.close()


def format_certificates(certs: Iterable[Certificate], fmt: str = "text") -> str:
    """Line-delimited text or json records, or one csv document with a header."""
    certs = list(certs)
    if fmt == "text":
        return "".join(c.to_text() + "\n" for c in certs)
    if fmt == "json":
        return "".join(c.to_json() + "\n" for c in certs)
    if fmt == "csv":
        sink = io.BytesIO()
        pacsv.write_csv(certificates_table(certs), sink)
        return sink.getvalue().decode("utf-8")
    raise ValueError(f"Unknown format: {fmt}")


def parse_certificate(line: str) -> Certificate:
    """Parse one json or text record; json records start with '{'."""
    try:
        if line.lstrip().startswith("{"):
            data = json.loads(line)
            if data.get("record") != "certificate":
                raise CertificateFormatError(f"Not a certificate record: {line!r}")
            return Certificate.from_json(data)
        return Certificate.from_text(line)
    except CertificateFormatError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise CertificateFormatError(f"Invalid certificate record {line!r}: {exc}") from exc


def read_certificates(lines: Iterable[str]) -> list[Certificate]:
    return [parse_certificate(line) for line in lines if line.strip()]


def _is_annotation(line: str) -> bool:
    # exception pairs ride along in reports as comments (text) or non-certificate records (json)
    if line.startswith("#"):
        return True
    if line.lstrip().startswith("{"):
        try:
            return json.loads(line).get("record") == "exception"
        except ValueError:
            return False
    return False


def recheck(lines: Iterable[str]) -> tuple[int, list[str]]:
    """Recompute every verdict; returns the number checked and the disagreeing records."""
    checked = 0
    disagreements = []
    for number, line in enumerate(lines, start=1):
        if not line.strip() or _is_annotation(line):
            continue
        checked += 1
        try:
            cert = parse_certificate(line)
            if not recheck_certificate(cert):
                disagreements.append(f"line {number}: {cert.claim_id} {cert.subject}")
        except CertificateFormatError as exc:
            disagreements.append(f"line {number}: {exc}")
    if disagreements:
        logger.warning("recheck: %d of %d records disagree", len(disagreements), checked)
    return checked, disagreements
