import hashlib
import json
from dataclasses import asdict, dataclass, replace


def hurwitz_bound(g: int) -> int:
    """84(g - 1): the classical bound on |Aut| of a closed surface of genus g >= 2."""
    return 84 * (g - 1)


@dataclass(frozen=True)
class EnumOptions:
    periods_divide_order: bool = True
    max_order: int | None = None  # None: Hurwitz bound of the ambient genus
    max_exception_r: int = 16

    def __post_init__(self):
        if self.max_order is not None and self.max_order < 2:
            raise ValueError(f"max_order must be >= 2, got {self.max_order}")
        if self.max_exception_r < 1:
            raise ValueError(f"max_exception_r must be >= 1, got {self.max_exception_r}")

    def order_bound(self, g: int) -> int:
        return self.max_order if self.max_order is not None else hurwitz_bound(g)

    def resolved(self, g: int) -> "EnumOptions":
        return replace(self, max_order=self.order_bound(g))

    def as_dict(self) -> dict[str, any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(
            periods_divide_order=data.get("periods_divide_order", True),
            max_order=data.get("max_order"),
            max_exception_r=data.get("max_exception_r", 16),
        )

    def fingerprint(self) -> str:
        payload = json.dumps(self.as_dict(), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]
