from dataclasses import dataclass

from .signature import Signature, rh_admissible


@dataclass(frozen=True, order=True)
class AmbientNode:
    ambient_genus: int
    order: int
    signature: Signature

    def __post_init__(self):
        if self.ambient_genus < 2:
            raise ValueError(f"Ambient genus must be >= 2, got {self.ambient_genus}")
        if self.order < 1:
            raise ValueError(f"Invalid subgroup order: {self.order}")
        if self.order == 1 and self.signature != Signature(self.ambient_genus):
            raise ValueError(f"Trivial subgroup must have signature {self.ambient_genus};")
        if not rh_admissible(self.ambient_genus, self.order, self.signature):
            raise ValueError(
                f"Signature {self.signature} is not admissible for order {self.order} "
                f"in genus {self.ambient_genus}"
            )

    @classmethod
    def root(cls, g: int) -> "AmbientNode":
        return cls(g, 1, Signature(g))

    @property
    def is_root(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        return f"g={self.ambient_genus} |T|={self.order} ({self.signature})"

    def as_dict(self) -> dict[str, any]:
        return {
            "ambient_genus": self.ambient_genus,
            "order": self.order,
            "signature": str(self.signature),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["ambient_genus"],
            data["order"],
            Signature.from_string(data["signature"]),
        )
