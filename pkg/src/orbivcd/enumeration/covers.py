import logging
from functools import lru_cache

from sympy import divisors

from ..models.cover import BranchDatum, CoverPair
from ..models.rational import Rational
from ..models.signature import Signature, orbifold_euler

logger = logging.getLogger(__name__)

Orders = tuple[int, ...]


@lru_cache(maxsize=None)
def _upstairs_orders(base_period: int, degree: int, budget: Rational | None = None) -> tuple[Orders, ...]:
    """Multisets of upstairs orders q | p whose local degrees p/q sum to degree.

    Proper local degrees e < p produce cone points of weight 1 - e/p; with a
    budget, multisets whose cone weight exceeds it are skipped. The rest of
    the degree is filled with unramified preimages (q = 1, local degree p).
    """
    p = base_period
    proper = sorted((e for e in divisors(p) if e < p), reverse=True)
    found: list[Orders] = []

    def extend(remaining: int, start: int, parts: tuple[int, ...], weight: Rational):
        if remaining % p == 0:
            cones = sorted(p // e for e in parts)
            found.append((1,) * (remaining // p) + tuple(cones))
        for j in range(start, len(proper)):
            e = proper[j]
            if e > remaining:
                continue
            w = weight + Rational(p - e, p)
            if budget is not None and w > budget:
                continue
            extend(remaining - e, j, parts + (e,), w)

    extend(degree, 0, (), Rational(0))
    return tuple(sorted(found))


def branch_data_solutions(base_period: int, degree: int) -> list[BranchDatum]:
    if base_period < 2:
        raise ValueError(f"Invalid base period: {base_period}")
    if degree < 1:
        raise ValueError(f"Invalid cover degree: {degree}")
    return [BranchDatum(base_period, orders) for orders in _upstairs_orders(base_period, degree)]


@lru_cache(maxsize=4096)
def _covers(base: Signature, degree: int) -> tuple[CoverPair, ...]:
    budget = 2 - degree * orbifold_euler(base)  # total cone weight when the total genus is 0
    if budget < 0:
        return ()
    # 2 g_total = max_preimages - preimages
    max_preimages = 2 - degree * (2 - 2 * base.genus) + base.k * degree

    # (cone orders, preimage count, cone weight) -> lexicographically least prefix
    states: dict[tuple[Orders, int, Rational], tuple[Orders, ...]] = {((), 0, Rational(0)): ()}
    for p in base.periods:
        options = _upstairs_orders(p, degree, budget)
        advanced: dict[tuple[Orders, int, Rational], tuple[Orders, ...]] = {}
        for (cones, count, weight), prefix in states.items():
            for orders in options:
                added = tuple(q for q in orders if q >= 2)
                w = weight + sum((Rational(q - 1, q) for q in added), Rational(0))
                if w > budget:
                    continue
                n = count + len(orders)
                if n > max_preimages:
                    continue
                key = (tuple(sorted(cones + added)), n, w)
                candidate = prefix + (orders,)
                if key not in advanced or candidate < advanced[key]:
                    advanced[key] = candidate
        states = advanced

    witnesses: dict[Signature, tuple[Orders, ...]] = {}
    for (cones, count, _), prefix in states.items():
        twice_genus = max_preimages - count
        if twice_genus < 0 or twice_genus % 2:
            continue
        total = Signature(twice_genus // 2, cones)
        if total not in witnesses or prefix < witnesses[total]:
            witnesses[total] = prefix

    covers = tuple(
        CoverPair(
            base,
            degree,
            total,
            tuple(BranchDatum(p, orders) for p, orders in zip(base.periods, prefix)),
        )
        for total, prefix in sorted(witnesses.items())
    )
    logger.debug("covers of degree %d over %s: %d totals", degree, base, len(covers))
    return covers


def enumerate_covers(base: Signature, degree: int) -> list[CoverPair]:
    """Every total signature admitting a degree-d orbifold cover onto base.

    One witness per total: the lexicographically least assignment of branch
    data to the base periods.
    """
    if degree < 2:
        raise ValueError(f"Cover degree must be >= 2, got {degree}")
    return list(_covers(base, degree))


def cover_admissible(base: Signature, degree: int, total: Signature) -> CoverPair | None:
    if degree < 2:
        raise ValueError(f"Cover degree must be >= 2, got {degree}")
    for cover in _covers(base, degree):
        if cover.total == total:
            return cover
    return None
