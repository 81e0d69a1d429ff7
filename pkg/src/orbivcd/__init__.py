from .enumeration import (
    SubgroupDag,
    build_subgroup_dag,
    cover_admissible,
    enumerate_covers,
    enumerate_period_multisets,
    enumerate_signatures,
    tower_lambda,
)
from .models import (
    AmbientNode,
    Certificate,
    CoverPair,
    EnumOptions,
    ExceptionPair,
    Signature,
    harer_vcd,
    rh_admissible,
    weyl_vcd,
)

__all__ = [
    "AmbientNode",
    "Certificate",
    "CoverPair",
    "EnumOptions",
    "ExceptionPair",
    "Signature",
    "SubgroupDag",
    "build_subgroup_dag",
    "cover_admissible",
    "enumerate_covers",
    "enumerate_period_multisets",
    "enumerate_signatures",
    "harer_vcd",
    "rh_admissible",
    "tower_lambda",
    "weyl_vcd",
]
