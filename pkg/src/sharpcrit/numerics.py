"""Number handling: exact rationals where possible, tolerant floats elsewhere.

Threshold comparisons drive every classification in this package, so the
rule is fixed once, here: if both operands are rational (int/Fraction),
compare exactly; otherwise compare as floats with a relative tolerance,
resolving ties to the boundary case.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Num = Union[int, float, Fraction]

#: default tolerance for comparisons involving at least one float operand
DEFAULT_COMPARE_TOL = 1e-12


def is_exact(x: Num) -> bool:
    """True when x participates in exact rational arithmetic."""
    return isinstance(x, Rational) and not isinstance(x, bool)


def as_float(x: Num) -> float:
    return float(x)


def parse_number(text: str) -> Num:
    """Parse a CLI-style number: '5/3', '2', '1.5' become exact Fractions,
    anything else that float() accepts becomes a float."""
    s = text.strip()
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError):
        return float(s)
    if value.denominator == 1:
        return int(value)
    return value


def compare(a: Num, b: Num, tol: float = DEFAULT_COMPARE_TOL) -> int:
    """Three-way comparison: -1, 0, +1 for a < b, a == b, a > b.

    Exact when both operands are rational; otherwise |a-b| within
    tol * max(1, |a|, |b|) counts as equality (ties to the boundary).
    """
    if is_exact(a) and is_exact(b):
        d = a - b
        return (d > 0) - (d < 0)
    fa, fb = float(a), float(b)
    scale = max(1.0, abs(fa), abs(fb))
    if abs(fa - fb) <= tol * scale:
        return 0
    return 1 if fa > fb else -1


def format_number(x: Num) -> str:
    """Deterministic text form: 'a/b' for non-integer rationals, repr otherwise."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return repr(float(x))
