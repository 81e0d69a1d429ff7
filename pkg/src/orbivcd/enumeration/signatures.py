import logging
import math

from ..models.options import EnumOptions
from ..models.rational import Rational
from ..models.signature import Signature
from .periods import enumerate_period_multisets

logger = logging.getLogger(__name__)


def enumerate_signatures(g: int, order: int, opts: EnumOptions | None = None) -> list[Signature]:
    """All signatures (g_L; p_1, ..., p_k) with (2g - 2)/order == 2 g_L - 2 + l_L.

    The quotient genus runs up to the value solving the equation with l_L = 0.
    """
    if g < 2:
        raise ValueError(f"Ambient genus must be >= 2, got {g}")
    if order < 1:
        raise ValueError(f"Invalid subgroup order: {order}")
    opts = opts or EnumOptions()
    if order == 1:
        return [Signature(g)]

    share = Rational(2 * g - 2, order)
    divisor_of = order if opts.periods_divide_order else None
    signatures = []
    for genus in range(0, math.floor((share + 2) / 2) + 1):
        target = share - 2 * genus + 2
        if target < 0:
            continue
        for periods in enumerate_period_multisets(target, divisor_of):
            signatures.append(Signature(genus, periods))
    signatures.sort()
    logger.debug("g=%d order=%d: %d signatures", g, order, len(signatures))
    return signatures
