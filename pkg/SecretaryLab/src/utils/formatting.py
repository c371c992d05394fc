from fractions import Fraction


def format_rational(value: Fraction, digits: int = 12) -> str:
    """``p/q ≈ decimal`` with ``digits`` significant digits."""
    return f"{value} ≈ {float(value):.{digits}g}"


def format_float(value: float, digits: int = 12) -> str:
    return f"{value:.{digits}g}"
