from dataclasses import dataclass

import pyarrow as pa

from .rational import Rational
from .signature import Signature, orbifold_euler


@dataclass(frozen=True, order=True)
class BranchDatum:
    """Preimages of one base cone point of order p: upstairs orders q | p, local degrees p/q."""

    base_period: int
    upstairs_orders: tuple[int, ...]

    def __post_init__(self):
        if self.base_period < 2:
            raise ValueError(f"Invalid base period: {self.base_period}")
        orders = tuple(sorted(self.upstairs_orders))
        for q in orders:
            if q < 1 or self.base_period % q:
                raise ValueError(f"Upstairs order {q} does not divide {self.base_period}")
        object.__setattr__(self, "upstairs_orders", orders)

    @property
    def degree(self) -> int:
        return sum(self.base_period // q for q in self.upstairs_orders)

    @property
    def cone_orders(self) -> tuple[int, ...]:
        """Upstairs orders that are cone points of the total space (q >= 2)."""
        return tuple(q for q in self.upstairs_orders if q >= 2)

    def __str__(self) -> str:
        return "{" + ",".join(str(q) for q in self.upstairs_orders) + "}"


@dataclass(frozen=True, order=True)
class CoverPair:
    """Degree-d orbifold cover total -> base, witnessed by one branch datum per base period."""

    base: Signature
    degree: int
    total: Signature
    branch_data: tuple[BranchDatum, ...]

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError(f"Cover degree must be >= 2, got {self.degree}")
        if tuple(b.base_period for b in self.branch_data) != self.base.periods:
            raise ValueError(f"Branch data {self.branch_data} do not match base {self.base}")
        for datum in self.branch_data:
            if datum.degree != self.degree:
                raise ValueError(f"Local degrees of {datum} do not sum to {self.degree}")
        cones = tuple(sorted(q for b in self.branch_data for q in b.cone_orders))
        if cones != self.total.periods:
            raise ValueError(f"Branch data {self.branch_data} do not produce {self.total}")
        if orbifold_euler(self.total) != self.degree * orbifold_euler(self.base):
            raise ValueError(
                f"Euler characteristic of {self.total} is not {self.degree} x that of {self.base}"
            )

    @property
    def preimage_count(self) -> int:
        """All preimages of base cone points, unramified ones (q = 1) included."""
        return sum(len(b.upstairs_orders) for b in self.branch_data)

    def euler_identity(self, count_smooth_preimages: bool = True) -> tuple[int, int]:
        """Both sides of 2g_L + k_L - 2 = d(2g_T - 2) + d k_T.

        With count_smooth_preimages=False, k_L is the cone-point count of the
        total signature; that reading does not balance in general (the
        genus-2 hyperelliptic cover gives 2 against 8).
        """
        k_total = self.preimage_count if count_smooth_preimages else self.total.k
        lhs = 2 * self.total.genus + k_total - 2
        rhs = self.degree * (2 * self.base.genus - 2) + self.degree * self.base.k
        return lhs, rhs

    def ramification_identity(self) -> tuple[Rational, Rational]:
        """(sum of 1/q over all preimages, d * sum of 1/p over base periods)."""
        upstairs = sum(
            (Rational(1, q) for b in self.branch_data for q in b.upstairs_orders), Rational(0)
        )
        downstairs = self.degree * sum((Rational(1, p) for p in self.base.periods), Rational(0))
        return upstairs, downstairs

    def __str__(self) -> str:
        data = " ".join(str(b) for b in self.branch_data)
        return f"{self.total} -[{self.degree}]-> {self.base}" + (f" {data}" if data else "")

    def as_dict(self) -> dict[str, any]:
        return {
            "base": str(self.base),
            "degree": self.degree,
            "total": str(self.total),
            "branch_data": [list(b.upstairs_orders) for b in self.branch_data],
        }

    @classmethod
    def from_dict(cls, data):
        base = Signature.from_string(data["base"])
        return cls(
            base,
            data["degree"],
            Signature.from_string(data["total"]),
            tuple(
                BranchDatum(p, tuple(orders))
                for p, orders in zip(base.periods, data["branch_data"])
            ),
        )

    @property
    def df(self):
        return pa.Table.from_pylist([self.as_dict()])
