import json
from dataclasses import dataclass

import pyarrow as pa

from .cover import CoverPair
from .rational import Rational, format_rational, parse_rational

CLAIM_IDS = ("gendec", "prop4", "claim_uno", "prop5", "eq5", "dichot")
VERDICTS = ("pass", "fail", "exception")

Operand = tuple[str, int | Rational]


def _format_value(value: int | Rational) -> str:
    return str(value) if isinstance(value, int) else format_rational(value)


def _parse_value(value: int | str) -> int | Rational:
    if isinstance(value, int):
        return value
    if "/" in value:
        return parse_rational(value)
    return int(value)


@dataclass(frozen=True)
class Certificate:
    """One checked inequality instance; verdict and case label follow from the operands."""

    claim_id: str
    subject: str
    case_label: str
    operands: tuple[Operand, ...]
    verdict: str

    def __post_init__(self):
        if self.claim_id not in CLAIM_IDS:
            raise ValueError(f"Unknown claim id: {self.claim_id}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"Unknown verdict: {self.verdict}")

    @property
    def values(self) -> dict[str, int | Rational]:
        return dict(self.operands)

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    def as_dict(self) -> dict[str, any]:
        return {
            "claim_id": self.claim_id,
            "subject": self.subject,
            "case_label": self.case_label,
            "operands": " ".join(f"{n}={_format_value(v)}" for n, v in self.operands),
            "verdict": self.verdict,
        }

    @property
    def df(self):
        return pa.Table.from_pylist([self.as_dict()])

    def to_json(self) -> str:
        record = {
            "record": "certificate",
            "claim_id": self.claim_id,
            "subject": self.subject,
            "case_label": self.case_label,
            "operands": {
                n: v if isinstance(v, int) else _format_value(v) for n, v in self.operands
            },
            "verdict": self.verdict,
        }
        return json.dumps(record, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str | dict) -> "Certificate":
        data = json.loads(line) if isinstance(line, str) else line
        return cls(
            data["claim_id"],
            data["subject"],
            data["case_label"],
            tuple((n, _parse_value(v)) for n, v in data["operands"].items()),
            data["verdict"],
        )

    def to_text(self) -> str:
        operands = " ".join(f"{n}={_format_value(v)}" for n, v in self.operands)
        return "\t".join([self.claim_id, self.case_label, operands, self.verdict, self.subject])

    @classmethod
    def from_text(cls, line: str) -> "Certificate":
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 5:
            raise ValueError(f"Invalid certificate line: {line!r}")
        claim_id, case_label, operands, verdict, subject = fields
        pairs = []
        for token in operands.split():
            name, _, value = token.partition("=")
            pairs.append((name, _parse_value(value)))
        return cls(claim_id, subject, case_label, tuple(pairs), verdict)


@dataclass(frozen=True, order=True)
class ExceptionPair:
    """An edge of a subgroup DAG where the Weyl-group vcd does not drop."""

    upper: tuple[int, int]  # (g_L, k_L), the smaller subgroup
    lower: tuple[int, int]  # (g_T, k_T), the larger subgroup
    witness: CoverPair

    @property
    def family(self) -> str:
        if self.upper == (2, 0) and self.lower == (0, 6):
            return "i"
        g_l, r = self.upper
        if g_l == 1 and r >= 1 and self.lower == (0, r + 3):
            return "ii"
        raise ValueError(f"{self.upper} over {self.lower} is in neither exceptional family")

    def as_dict(self) -> dict[str, any]:
        return {
            "upper": list(self.upper),
            "lower": list(self.lower),
            "family": self.family,
            "witness": self.witness.as_dict(),
        }
