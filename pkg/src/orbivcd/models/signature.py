from dataclasses import dataclass, field

import pyarrow as pa

from .rational import Rational
from .vcd import harer_vcd


@dataclass(frozen=True, order=True)
class Signature:
    """Quotient orbifold datum (genus; p_1, ..., p_k) with periods sorted nondecreasing."""

    genus: int
    periods: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"Invalid genus: {self.genus}")
        periods = tuple(sorted(int(p) for p in self.periods))
        for p in periods:
            if p < 2:
                raise ValueError(f"Invalid period {p} in signature (periods must be >= 2)")
        object.__setattr__(self, "periods", periods)

    @classmethod
    def from_string(cls, text: str) -> "Signature":
        """Create a Signature from the grammar '<genus>;<p1>,<p2>,...', e.g. '0;2,3,7' or '2;'."""
        if ";" not in text:
            raise ValueError(f"Invalid signature format: {text!r}")
        genus_part, periods_part = text.strip().split(";", 1)
        try:
            genus = int(genus_part)
            periods = [int(p) for p in periods_part.split(",") if p.strip()]
        except ValueError as exc:
            raise ValueError(f"Invalid signature format: {text!r}") from exc
        return cls(genus, tuple(periods))

    @classmethod
    def from_any(cls, sig: "str | Signature | tuple") -> "Signature":
        if isinstance(sig, Signature):
            return sig
        if isinstance(sig, str):
            return cls.from_string(sig)
        if isinstance(sig, (tuple, list)):
            genus, periods = sig
            return cls(genus, tuple(periods))
        raise ValueError(f"Cannot create Signature from {sig}")

    def __str__(self) -> str:
        return f"{self.genus};" + ",".join(str(p) for p in self.periods)

    @property
    def k(self) -> int:
        return len(self.periods)

    @property
    def shape(self) -> tuple[int, int]:
        """(genus, k), the data the vcd formulas see."""
        return (self.genus, self.k)

    def as_dict(self) -> dict[str, any]:
        return {
            "genus": self.genus,
            "periods": list(self.periods),
            "k": self.k,
            "signature": str(self),
        }

    @property
    def df(self):
        return pa.Table.from_pylist([self.as_dict()])


def l_sum(sig: Signature) -> Rational:
    """l = sum over periods of (1 - 1/p); satisfies k/2 <= l < k (k > 0)."""
    return sum((Rational(p - 1, p) for p in sig.periods), Rational(0))


def orbifold_euler(sig: Signature) -> Rational:
    return 2 - 2 * sig.genus - l_sum(sig)


def nu(sig: Signature) -> int:
    return 4 * sig.genus + sig.k - 4


def weyl_vcd(sig: Signature) -> int:
    """vcd of the Weyl group of a subgroup with this quotient signature.

    The Weyl group has finite index in the mapping class group of the
    quotient with its cone points marked, so this is harer_vcd(genus, k).
    Spherical and Euclidean signatures never arise from a closed surface of
    genus >= 2; for them the same value is returned as a convention.
    """
    return harer_vcd(sig.genus, sig.k)


def rh_admissible(g: int, order: int, sig: Signature) -> bool:
    """Riemann-Hurwitz: (2g - 2) / order == 2 g_L - 2 + l_L, exactly."""
    if g < 2:
        raise ValueError(f"Ambient genus must be >= 2, got {g}")
    if order < 1:
        raise ValueError(f"Invalid subgroup order: {order}")
    return Rational(2 * g - 2, order) == 2 * sig.genus - 2 + l_sum(sig)
