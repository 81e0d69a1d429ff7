"""Naive reference implementations, used to cross-check the pruned enumerators.

Nothing here prunes beyond its budget or caches; performance is not a goal.
"""

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

from sympy.utilities.iterables import partitions

from .enumeration.dag import SubgroupDag
from .models.node import AmbientNode
from .models.rational import Rational
from .models.signature import Signature, orbifold_euler, rh_admissible


@dataclass(frozen=True)
class OracleBudget:
    max_period: int
    max_terms: int
    max_order: int = 1

    def __post_init__(self):
        if self.max_period < 2:
            raise ValueError(f"max_period must be >= 2, got {self.max_period}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.max_order < 1:
            raise ValueError(f"max_order must be >= 1, got {self.max_order}")

    @classmethod
    def for_fiber(cls, g: int, order: int) -> "OracleBudget":
        """Large enough for every signature of an order-`order` subgroup when periods divide it."""
        share = Rational(2 * g - 2, order)
        return cls(max_period=max(order, 2), max_terms=max(1, math.floor(2 * (share + 2))), max_order=order)

    def admits(self, sig: Signature) -> bool:
        return sig.k <= self.max_terms and all(p <= self.max_period for p in sig.periods)


def brute_multisets(target: Rational, budget: OracleBudget) -> list[tuple[int, ...]]:
    target = Rational(target)
    found = []
    for size in range(0, budget.max_terms + 1):
        for combo in combinations_with_replacement(range(2, budget.max_period + 1), size):
            if sum((Rational(p - 1, p) for p in combo), Rational(0)) == target:
                found.append(combo)
    return sorted(found)


def brute_signatures(
    g: int, order: int, budget: OracleBudget, periods_divide_order: bool = True
) -> list[Signature]:
    """Scan every genus 0..g and every period multiset inside the budget."""
    if order == 1:
        return [Signature(g)]
    periods = [
        p for p in range(2, budget.max_period + 1) if not periods_divide_order or order % p == 0
    ]
    found = []
    for genus in range(0, g + 1):
        for size in range(0, budget.max_terms + 1):
            for combo in combinations_with_replacement(periods, size):
                sig = Signature(genus, combo)
                if rh_admissible(g, order, sig):
                    found.append(sig)
    return sorted(found)


def _local_degrees(base_period: int, degree: int) -> list[tuple[Counter, int]]:
    """(cone orders, preimage count) for every way to split degree into divisors of base_period."""
    found = []
    for parts in partitions(degree):
        if any(base_period % e for e in parts):
            continue
        cones = Counter()
        for e, times in parts.items():
            if e < base_period:
                cones[base_period // e] += times
        found.append((cones, sum(parts.values())))
    return found


def _brute_cover(base: Signature, degree: int, total: Signature) -> bool:
    if orbifold_euler(total) != degree * orbifold_euler(base):
        return False
    # 2 g_total = 2 - d(2 - 2 g_base) + k_base d - preimages
    preimages = 2 - degree * (2 - 2 * base.genus) + base.k * degree - 2 * total.genus
    options = {p: _local_degrees(p, degree) for p in set(base.periods)}

    def search(index: int, remaining: Counter, count: int) -> bool:
        if index == base.k:
            return not remaining and count == preimages
        for cones, n in options[base.periods[index]]:
            if cones - remaining:
                continue
            if search(index + 1, remaining - cones, count + n):
                return True
        return False

    return search(0, Counter(total.periods), 0)


def brute_tower_lambda(g: int, node: AmbientNode, budget: OracleBudget) -> int:
    """Longest chain of admissible covers from the trivial subgroup to node, by plain recursion."""
    fibers = {
        e: brute_signatures(g, e, OracleBudget.for_fiber(g, e))
        for e in range(1, node.order)
        if node.order % e == 0 and e <= budget.max_order
    }

    def longest(order: int, sig: Signature) -> int:
        if order == 1:
            return 0
        best = 0
        for e, signatures in fibers.items():
            if e >= order or order % e:
                continue
            for lower in signatures:
                if _brute_cover(sig, order // e, lower):
                    best = max(best, 1 + longest(e, lower))
        return best

    return longest(node.order, node.signature)


def crosscheck_fiber(
    g: int, order: int, signatures: list[Signature], periods_divide_order: bool = True
) -> str | None:
    """Compare one enumerated fiber with the brute-force scan inside OracleBudget.for_fiber.

    Signatures outside the budget (possible only without the divisor
    constraint) are left out of the comparison.
    """
    budget = OracleBudget.for_fiber(g, order)
    expected = brute_signatures(g, order, budget, periods_divide_order)
    actual = sorted(s for s in signatures if budget.admits(s))
    if actual == expected:
        return None
    return (
        f"genus {g} order {order}: engine {[str(s) for s in actual]} "
        f"!= oracle {[str(s) for s in expected]}"
    )


def crosscheck_dag(dag: SubgroupDag, max_order: int = 24) -> list[str]:
    """Compare the order fibers of a DAG (up to max_order) with the brute-force scan.

    Returns one message per mismatching order.
    """
    opts = dag.options
    g = dag.ambient_genus
    problems = []
    for order in range(1, min(max_order, opts.max_order) + 1):
        problem = crosscheck_fiber(g, order, dag.fiber(order), opts.periods_divide_order)
        if problem:
            problems.append(problem)
    return problems
