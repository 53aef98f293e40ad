"""Numeric backend helpers.

All core computations run on exact rationals (``fractions.Fraction``);
a plain ``float`` backend exists only for asymptotic checks at population
sizes where exact powers are pointless. The two backends never mix inside
one computation: helpers here classify values and reject mixtures.
"""

from fractions import Fraction

from .errors import BackendMismatch

Rational = Fraction | int
Numeric = Fraction | int | float


def is_exact(value) -> bool:
    """True for ints and Fractions, False for floats."""
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def require_exact(name: str, value):
    if isinstance(value, float):
        raise BackendMismatch(
            f"{name} must be an exact rational (int or Fraction), got float {value!r}"
        )
    if not is_exact(value):
        raise BackendMismatch(f"{name} must be an exact rational, got {type(value).__name__}")
    return value


def numeric_backend(values) -> str:
    """Classify a group of numbers as one backend: 'exact' or 'float'.

    Raises BackendMismatch if the group mixes floats with exact rationals.
    """
    saw_exact = False
    saw_float = False
    for v in values:
        if isinstance(v, float):
            saw_float = True
        elif is_exact(v):
            saw_exact = True
        else:
            raise BackendMismatch(f"unsupported numeric type {type(v).__name__}")
    if saw_exact and saw_float:
        raise BackendMismatch("exact rationals and floats mixed in one computation")
    return "float" if saw_float else "exact"


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b', an integer, or a finite decimal into an exact Fraction.

    Decimals are read exactly: '0.855' becomes 171/200, never a float.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value) -> str:
    """Render a number as 'a/b' (or 'a' when integral).

    Floats are rendered through their exact binary ratio, which keeps the
    fraction field lossless even on the float backend.
    """
    if isinstance(value, float):
        num, den = value.as_integer_ratio()
        value = Fraction(num, den)
    else:
        value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_str(value, digits: int = 6) -> str:
    """Decimal approximation with the given number of significant digits."""
    return f"{float(value):.{digits}g}"
