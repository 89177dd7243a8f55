"""
Truncated Laurent series in z² with ModPoly coefficients.

A series is ``z^odd · Σ coeffs[i]·z^{order+2i}``; ``order`` is always even and
``truncation`` is the highest exponent of z (odd prefactor included) whose
coefficient is known exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from .modpoly import ModPoly, sum_of_products
from .rational import RatLike, as_rat
from ..utils.errors import SeriesNotInvertibleError

__all__ = ["ZSeries", "series_reciprocal"]


@dataclass(frozen=True)
class ZSeries:
    order: int
    coeffs: Tuple[ModPoly, ...]
    truncation: int
    odd: bool = False

    def __post_init__(self):
        if self.order % 2:
            raise ValueError(f"series order must be even, got {self.order}")
        span = self.truncation - self.order - int(self.odd)
        if span % 2:
            raise ValueError("truncation parity does not match the series parity")
        length = span // 2 + 1
        coeffs = tuple(self.coeffs[:max(length, 0)])
        if len(coeffs) < length:
            coeffs = coeffs + (ModPoly.zero(),) * (length - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coefficients(cls, order: int, coeffs: Iterable[Union[ModPoly, RatLike]],
                          truncation: int, odd: bool = False) -> "ZSeries":
        polys = tuple(c if isinstance(c, ModPoly) else ModPoly.constant(c) for c in coeffs)
        return cls(order, polys, truncation, odd)

    @classmethod
    def constant(cls, value: Union[ModPoly, RatLike], truncation: int) -> "ZSeries":
        return cls.from_coefficients(0, [value], truncation)

    @property
    def leading_exponent(self) -> int:
        return self.order + int(self.odd)

    def exponent(self, index: int) -> int:
        return self.order + 2 * index + int(self.odd)

    def coefficient(self, exponent: int) -> ModPoly:
        if exponent > self.truncation:
            raise ValueError(f"z^{exponent} lies beyond the truncation z^{self.truncation}")
        offset = exponent - self.leading_exponent
        if offset < 0 or offset % 2:
            return ModPoly.zero()
        return self.coeffs[offset // 2]

    def terms(self) -> List[Tuple[int, ModPoly]]:
        return [(self.exponent(i), c) for i, c in enumerate(self.coeffs)]

    def _check_parity(self, other: "ZSeries"):
        if self.odd != other.odd:
            raise ValueError("cannot add an odd series to an even one")

    def __add__(self, other: Union["ZSeries", ModPoly, RatLike]) -> "ZSeries":
        if not isinstance(other, ZSeries):
            other = ZSeries.constant(other, self.truncation)
        self._check_parity(other)
        order = min(self.order, other.order)
        truncation = min(self.truncation, other.truncation)
        lead = order + int(self.odd)
        coeffs = []
        for e in range(lead, truncation + 1, 2):
            coeffs.append(_safe(self, e) + _safe(other, e))
        return ZSeries(order, tuple(coeffs), truncation, self.odd)

    __radd__ = __add__

    def __neg__(self) -> "ZSeries":
        return ZSeries(self.order, tuple(-c for c in self.coeffs), self.truncation, self.odd)

    def __sub__(self, other: Union["ZSeries", ModPoly, RatLike]) -> "ZSeries":
        if not isinstance(other, ZSeries):
            other = ZSeries.constant(other, self.truncation)
        return self + (-other)

    def __rsub__(self, other: Union[ModPoly, RatLike]) -> "ZSeries":
        return ZSeries.constant(other, self.truncation) - self

    def scale(self, factor: Union[ModPoly, RatLike]) -> "ZSeries":
        if not isinstance(factor, ModPoly):
            factor = ModPoly.constant(factor)
        return ZSeries(self.order, tuple(c * factor for c in self.coeffs), self.truncation, self.odd)

    def __mul__(self, other: Union["ZSeries", ModPoly, RatLike]) -> "ZSeries":
        if not isinstance(other, ZSeries):
            return self.scale(other)
        both_odd = self.odd and other.odd
        order = self.order + other.order + (2 if both_odd else 0)
        odd = self.odd != other.odd
        truncation = min(self.truncation + other.leading_exponent,
                         other.truncation + self.leading_exponent)
        length = (truncation - order - int(odd)) // 2 + 1
        coeffs = []
        for n in range(max(length, 0)):
            pairs = [(self.coeffs[i], other.coeffs[n - i])
                     for i in range(max(0, n - len(other.coeffs) + 1), min(n, len(self.coeffs) - 1) + 1)]
            coeffs.append(sum_of_products(pairs))
        return ZSeries(order, tuple(coeffs), truncation, odd)

    __rmul__ = __mul__

    def square(self) -> "ZSeries":
        return self * self

    def reciprocal(self) -> "ZSeries":
        """t with self·t = 1 through z^{truncation − 2·leading exponent}."""
        if not self.coeffs:
            raise SeriesNotInvertibleError("empty series")
        lead = self.coeffs[0]
        if lead.is_zero or not lead.is_constant:
            raise SeriesNotInvertibleError(f"leading coefficient {lead} is not a nonzero constant")
        inv_lead = 1 / lead.coefficient(0)
        truncation = self.truncation - 2 * self.leading_exponent
        order = -self.order - (2 if self.odd else 0)
        length = (truncation - order - int(self.odd)) // 2 + 1
        out: List[ModPoly] = [ModPoly.constant(inv_lead)]
        for n in range(1, length):
            pairs = [(self.coeffs[i], out[n - i]) for i in range(1, min(n, len(self.coeffs) - 1) + 1)]
            out.append(sum_of_products(pairs) * (-inv_lead))
        return ZSeries(order, tuple(out[:length]), truncation, self.odd)

    def derivative(self) -> "ZSeries":
        coeffs = tuple(c * self.exponent(i) for i, c in enumerate(self.coeffs))
        if self.odd:
            return ZSeries(self.order, coeffs, self.truncation - 1, False)
        return ZSeries(self.order - 2, coeffs, self.truncation - 1, True)

    def rescale(self, factor: RatLike) -> "ZSeries":
        """Substitute z → factor·z."""
        factor = as_rat(factor)
        if factor == 0:
            raise ValueError("rescale factor must be nonzero")
        coeffs = tuple(c * (factor ** self.exponent(i)) for i, c in enumerate(self.coeffs))
        return ZSeries(self.order, coeffs, self.truncation, self.odd)

    def truncate(self, truncation: int) -> "ZSeries":
        if truncation > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return ZSeries(self.order, self.coeffs, truncation, self.odd)

    def nonzero_exponents(self) -> List[int]:
        return [e for e, c in self.terms() if not c.is_zero]

    def evaluate_at_k2(self, x: RatLike) -> List[Tuple[int, Fraction]]:
        return [(e, c.evaluate(x)) for e, c in self.terms()]


def _safe(series: ZSeries, exponent: int) -> ModPoly:
    offset = exponent - series.leading_exponent
    if offset < 0 or offset % 2:
        return ModPoly.zero()
    return series.coeffs[offset // 2]


def series_reciprocal(series: ZSeries) -> ZSeries:
    return series.reciprocal()
