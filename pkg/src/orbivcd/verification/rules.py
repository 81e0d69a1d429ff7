"""Verdict rules, one per claim id.

A certificate stores only named operands; the case label and verdict are
recomputed here from those operands, which is what makes a certificate
checkable without rebuilding any DAG.
"""

from collections.abc import Callable, Iterable, Mapping

from ..models.certificate import Certificate, Operand
from ..models.rational import Rational
from ..models.vcd import harer_vcd

Operands = Mapping[str, int | Rational]
Rule = Callable[[Operands], tuple[str, str]]


class CertificateFormatError(ValueError):
    """A certificate record that cannot be parsed or lacks operands its rule needs."""


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _gendec(v: Operands) -> tuple[str, str]:
    g_t, k_t, g_l, k_l, preimages = v["g_T"], v["k_T"], v["g_L"], v["k_L"], v["K"]
    if g_t > 1:
        return "(i) g_T > 1", _verdict(g_t < g_l)
    label = "(ii) g_T ≤ 1"
    if g_t > g_l:
        return label, "fail"
    if g_t < g_l or k_t < k_l:
        return label, "pass"
    # equal genus, cone count did not grow: the count over every preimage still must
    if k_t < preimages:
        return label, "exception"
    return label, "fail"


def prop4_case(g_l: int, k_l: int, g_t: int, k_t: int) -> str:
    if g_t >= g_l:
        return "monotone"
    if g_t > 0:
        if k_t == 0 and k_l == 0:
            return "1a"
        if k_l == 0:
            return "1b"
        if k_t == 0:
            return "1c"
        return "1d"
    return "2a" if k_l == 0 else "2b"


def exception_family(upper: tuple[int, int], lower: tuple[int, int]) -> str | None:
    if upper == (2, 0) and lower == (0, 6):
        return "i"
    g_l, r = upper
    if g_l == 1 and r >= 1 and lower == (0, r + 3):
        return "ii"
    return None


def _prop4(v: Operands) -> tuple[str, str]:
    g_l, k_l, g_t, k_t = v["g_L"], v["k_L"], v["g_T"], v["k_T"]
    vcd_l, vcd_t = v["vcd_L"], v["vcd_T"]
    label = prop4_case(g_l, k_l, g_t, k_t)
    if vcd_l != harer_vcd(g_l, k_l) or vcd_t != harer_vcd(g_t, k_t):
        return label, "fail"
    if label == "monotone":
        return label, _verdict(vcd_t <= vcd_l)
    if vcd_t < vcd_l:
        return label, "pass"
    family = exception_family((g_l, k_l), (g_t, k_t))
    if vcd_t == vcd_l and family:
        return f"exception-{family}", "exception"
    return label, "fail"


def _claim_uno(v: Operands) -> tuple[str, str]:
    order, vcd_wt, lam, vcd_g = v["order"], v["vcd_WT"], v["lambda"], v["vcd_G"]
    label = "vcd≥3" if vcd_wt >= 3 else f"vcd={vcd_wt}"
    ok = (
        v["g_T"] > 0
        and v["order_bound"] == order * vcd_wt - 1
        and v["order_bound"] <= vcd_g
        and vcd_wt + lam + 1 <= vcd_g
    )
    return label, _verdict(ok)


def _prop5(v: Operands) -> tuple[str, str]:
    if v["order"] == 1:
        label = "T=1"
    elif v["g_T"] > 0:
        label = "g_T>0"
    else:
        label = "g_T=0"
    return label, _verdict(v["vcd_WT"] + v["lambda"] <= v["vcd_G"])


def _eq5(v: Operands) -> tuple[str, str]:
    g, k, nu, vcd = v["g"], v["k"], v["nu"], v["vcd"]
    if g == 0:
        label, expected = "g=0", nu + 1
    elif k == 0:
        label, expected = "k=0", nu - 1
    else:
        label, expected = "g,k>0", nu
    return label, _verdict(nu == 4 * g + k - 4 and vcd == expected)


def _dichot(v: Operands) -> tuple[str, str]:
    label = "k_L=0" if v["k_L"] == 0 else "k_L>0"
    return label, _verdict(v["nu_T"] * v["degree"] <= v["nu_L"] + v["k_L"])


RULES: dict[str, Rule] = {
    "gendec": _gendec,
    "prop4": _prop4,
    "claim_uno": _claim_uno,
    "prop5": _prop5,
    "eq5": _eq5,
    "dichot": _dichot,
}


def evaluate(claim_id: str, operands: Operands) -> tuple[str, str]:
    """(case_label, verdict) for the operands of one claim instance."""
    if claim_id not in RULES:
        raise CertificateFormatError(f"Unknown claim id: {claim_id}")
    try:
        return RULES[claim_id](operands)
    except KeyError as exc:
        raise CertificateFormatError(f"{claim_id} certificate is missing operand {exc}") from exc


def issue(claim_id: str, subject: str, operands: Iterable[Operand]) -> Certificate:
    operands = tuple(operands)
    label, verdict = evaluate(claim_id, dict(operands))
    return Certificate(claim_id, subject, label, operands, verdict)


def recheck_certificate(cert: Certificate) -> bool:
    """True when label and verdict recomputed from the operands agree with the record."""
    return evaluate(cert.claim_id, cert.values) == (cert.case_label, cert.verdict)
