"""Exact rational arithmetic.

Every invariant in this package is a rational number and is computed with
``fractions.Fraction`` (arbitrary-precision, always in lowest terms with a
positive denominator).  Floats never enter a computation; they appear only
in rendering helpers for CSV/JSON output columns.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def rat(num: int, den: int = 1) -> Fraction:
    """Exact rational num/den in lowest terms; den = 0 raises ZeroDivisionError."""
    return Fraction(num, den)


def parse_rat(text: str) -> Fraction:
    """Parse an exact rational from 'p/q' or 'p' (optionally signed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def rat_str(x: Fraction) -> str:
    """Render exactly: 'p/q', or just 'p' for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_decimal(x: Fraction, digits: int = 12) -> str:
    """Fixed-point decimal rendering with `digits` fractional digits.

    Rounding is exact (round half to even on the scaled integer), so the
    rendering is independent of binary floating point.
    """
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    scale = 10**digits
    q, r = divmod(num * scale, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"
