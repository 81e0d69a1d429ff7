from sympy import factorint

VcdValue = int


def harer_vcd(g: int, n: int) -> VcdValue:
    """Virtual cohomological dimension of the mapping class group of S_{g,n}.

    Harer's formula covers 2g + n > 2; the remaining small cases are
    Γ_{0,0}, Γ_{0,1} (trivial), Γ_{0,2} ≅ Z and Γ_{1,0} ≅ SL_2(Z).
    """
    if g < 0 or n < 0:
        raise ValueError(f"Invalid surface type: g={g}, n={n}")
    if 2 * g + n > 2:
        if g > 0 and n > 0:
            return 4 * g + n - 4
        if n == 0:
            return 4 * g - 5
        return n - 3
    if g == 0 and n <= 1:
        return 0
    # (0, 2) and (1, 0)
    return 1


def prime_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    if n < 1:
        raise ValueError(f"Invalid order: {n}")
    return sum(factorint(n).values())


def lambda_upper(order: int) -> int:
    """Upper bound for the length of any finite group of the given order.

    Each strict step of a subgroup chain multiplies the order by an index
    >= 2, so it consumes at least one prime factor.
    """
    if order < 1:
        raise ValueError(f"Invalid order: {order}")
    return min(order - 1, prime_omega(order))
