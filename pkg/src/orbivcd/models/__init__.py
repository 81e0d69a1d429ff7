from .certificate import Certificate, ExceptionPair
from .cover import BranchDatum, CoverPair
from .node import AmbientNode
from .options import EnumOptions, hurwitz_bound
from .rational import Rational, rational
from .signature import Signature, l_sum, nu, orbifold_euler, rh_admissible, weyl_vcd
from .vcd import harer_vcd, lambda_upper, prime_omega

__all__ = [
    "AmbientNode",
    "BranchDatum",
    "Certificate",
    "CoverPair",
    "EnumOptions",
    "ExceptionPair",
    "Rational",
    "Signature",
    "harer_vcd",
    "hurwitz_bound",
    "l_sum",
    "lambda_upper",
    "nu",
    "orbifold_euler",
    "prime_omega",
    "rational",
    "rh_admissible",
    "weyl_vcd",
]
