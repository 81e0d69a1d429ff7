import logging
import math

from sympy import divisors

from ..models.rational import Rational

logger = logging.getLogger(__name__)

PeriodMultiset = tuple[int, ...]


def _extend(
    remaining: Rational,
    slots: int,
    p_min: int,
    prefix: PeriodMultiset,
    candidates: list[int] | None,
    out: list[PeriodMultiset],
):
    if slots == 0:
        if remaining == 0:
            out.append(prefix)
        return
    # every term 1 - 1/p lies in [1/2, 1)
    if remaining >= slots or 2 * remaining < slots:
        return
    if slots == 1:
        period = 1 / (1 - remaining)
        if period.denominator == 1 and period >= p_min:
            p = int(period)
            if candidates is None or p in candidates:
                out.append(prefix + (p,))
        return
    # periods are nondecreasing, so slots * (1 - 1/p) <= remaining
    p_max = math.floor(slots / (slots - remaining))
    if candidates is None:
        periods = range(p_min, p_max + 1)
    else:
        periods = [c for c in candidates if p_min <= c <= p_max]
    for p in periods:
        _extend(remaining - Rational(p - 1, p), slots - 1, p, prefix + (p,), candidates, out)


def enumerate_period_multisets(
    target: Rational | int, divisor_of: int | None = None
) -> list[PeriodMultiset]:
    """All multisets {p_i >= 2} with sum(1 - 1/p_i) == target, sorted lexicographically.

    The number of periods k ranges over [ceil(target), floor(2 * target)].
    """
    target = Rational(target)
    if target < 0:
        raise ValueError(f"Target must be non-negative, got {target}")
    candidates = None
    if divisor_of is not None:
        if divisor_of < 1:
            raise ValueError(f"Invalid divisor bound: {divisor_of}")
        candidates = [d for d in divisors(divisor_of) if d >= 2]

    found: list[PeriodMultiset] = []
    for k in range(math.ceil(target), math.floor(2 * target) + 1):
        _extend(target, k, 2, (), candidates, found)
    result = sorted(set(found))
    logger.debug("target %s (divisor_of=%s): %d multisets", target, divisor_of, len(result))
    return result
