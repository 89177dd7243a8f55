"""
Dense polynomials in the single variable k² with exact rational coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .rational import RatLike, as_rat, rat_to_str

__all__ = ["ModPoly", "poly_eval", "sum_of_products"]


def _trim(coeffs: Iterable[RatLike]) -> Tuple[Fraction, ...]:
    values = [as_rat(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _integer_form(coeffs: Sequence[Fraction]) -> Tuple[List[int], int]:
    den = lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _convolve(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class ModPoly:
    """Polynomial Σ coeffs[i]·k^{2i}; trailing zeros are trimmed on construction."""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def zero(cls) -> "ModPoly":
        return cls(())

    @classmethod
    def constant(cls, value: RatLike) -> "ModPoly":
        return cls((value,))

    @classmethod
    def one(cls) -> "ModPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, value: RatLike = 1) -> "ModPoly":
        if power < 0:
            raise ValueError(f"negative power of k^2: {power}")
        return cls((0,) * power + (value,))

    @classmethod
    def k2(cls) -> "ModPoly":
        return cls.monomial(1)

    @cached_property
    def integer_form(self) -> Tuple[List[int], int]:
        """(integer numerators, common denominator)."""
        return _integer_form(self.coeffs)

    @property
    def degree(self) -> Optional[int]:
        """Degree in k²; None for the zero polynomial."""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def evaluate(self, x: RatLike) -> Fraction:
        x = as_rat(x)
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __add__(self, other: Union["ModPoly", RatLike]) -> "ModPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ModPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "ModPoly":
        return ModPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["ModPoly", RatLike]) -> "ModPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: RatLike) -> "ModPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["ModPoly", RatLike]) -> "ModPoly":
        if not isinstance(other, ModPoly):
            factor = as_rat(other)
            return ModPoly(tuple(c * factor for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return ModPoly.zero()
        ints_a, den_a = self.integer_form
        ints_b, den_b = other.integer_form
        den = den_a * den_b
        return ModPoly(tuple(Fraction(c, den) for c in _convolve(ints_a, ints_b)))

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> "ModPoly":
        divisor = as_rat(other)
        if divisor == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / divisor)

    def to_json(self) -> List[str]:
        return [rat_to_str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = rat_to_str(magnitude)
            else:
                var = "k^2" if power == 1 else f"k^{2 * power}"
                body = var if magnitude == 1 else f"{rat_to_str(magnitude)}*{var}"
            sign = "-" if c < 0 else "+"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f" {sign} {body}")
        return "".join(terms)


def _coerce(value: Union[ModPoly, RatLike]) -> ModPoly:
    if isinstance(value, ModPoly):
        return value
    return ModPoly.constant(value)


def poly_eval(p: ModPoly, x: RatLike) -> Fraction:
    """Exact value of p at k² = x."""
    return p.evaluate(x)


def sum_of_products(pairs: Iterable[Tuple[ModPoly, ModPoly]]) -> ModPoly:
    """Σ p·q over all pairs, accumulated in integers and normalised once."""
    buckets: Dict[int, List[int]] = {}
    for p, q in pairs:
        if p.is_zero or q.is_zero:
            continue
        ints_p, den_p = p.integer_form
        ints_q, den_q = q.integer_form
        product = _convolve(ints_p, ints_q)
        den = den_p * den_q
        acc = buckets.setdefault(den, [])
        if len(acc) < len(product):
            acc.extend([0] * (len(product) - len(acc)))
        for i, c in enumerate(product):
            acc[i] += c
    if not buckets:
        return ModPoly.zero()
    common = lcm(*buckets)
    width = max(len(acc) for acc in buckets.values())
    total = [0] * width
    for den, acc in buckets.items():
        scale = common // den
        for i, c in enumerate(acc):
            total[i] += c * scale
    return ModPoly(tuple(Fraction(c, common) for c in total))
