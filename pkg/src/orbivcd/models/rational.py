from fractions import Fraction

Rational = Fraction


def rational(numerator: int, denominator: int = 1) -> Rational:
    """Build a normalized exact fraction; negative or zero denominators are rejected."""
    if denominator <= 0:
        raise ValueError(f"Invalid denominator: {denominator}")
    return Fraction(numerator, denominator)


def parse_rational(value: str | int | Fraction) -> Rational:
    """Parse '85/42', '-1/42' or '3'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    text = value.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rational(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Rational) -> str:
    return str(value)
