"""
Exact rationals. ``Rat`` is ``fractions.Fraction``: always in lowest terms,
positive denominator, 0 stored as 0/1.
"""

from fractions import Fraction
from typing import Union

__all__ = ["Rat", "RatLike", "as_rat", "rat_to_str", "parse_rat"]

Rat = Fraction
RatLike = Union[int, Fraction, str]


def as_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rat_to_str(value: Fraction) -> str:
    """Canonical JSON form: "p/q", or "p" when q = 1."""
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())
