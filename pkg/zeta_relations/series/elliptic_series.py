"""
Exact Laurent/Taylor tables for the Glaisher squares ns², nc², nd², dn² and
the circular limits cosec², sec².

Everything is generated from the Maclaurin series of sn, obtained term by term
from sn'' = -(1+k²)·sn + 2k²·sn³ with sn(0) = 0, sn'(0) = 1, together with
sn² + cn² = 1 and k²sn² + dn² = 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List

from ..algebra import ModPoly, ZSeries, bernoulli, sum_of_products
from ..utils.logger import get_logger

__all__ = [
    "LaurentCoeffTable",
    "TrigCoeffTable",
    "GlaisherSeries",
    "sn_series",
    "glaisher_series",
    "build_laurent_table",
    "build_trig_table",
    "cdef_combination",
    "check_cdef_identity",
    "sn_ode_residual",
    "doubling_identity_residual",
]

logger = get_logger("series.elliptic_series")

ONE_PLUS_K2 = ModPoly((1, 1))
ONE_MINUS_K2 = ModPoly((1, -1))
TWO_PLUS_K2 = ModPoly((2, 1))
K2 = ModPoly.k2()


@dataclass(frozen=True)
class LaurentCoeffTable:
    """c_j, d_j, e_j, f_j for 1 <= j <= max_j."""
    max_j: int
    c: Dict[int, ModPoly]
    d: Dict[int, ModPoly]
    e: Dict[int, ModPoly]
    f: Dict[int, ModPoly]

    def family(self, name: str) -> Dict[int, ModPoly]:
        if name not in ("c", "d", "e", "f"):
            raise ValueError(f"Unknown Laurent family: {name}")
        return getattr(self, name)


@dataclass(frozen=True)
class TrigCoeffTable:
    """a_j (cosec²) and b_j (sec²) for 0 <= j <= max_j."""
    max_j: int
    a: Dict[int, Fraction]
    b: Dict[int, Fraction]


@dataclass(frozen=True)
class GlaisherSeries:
    sn: ZSeries
    sn2: ZSeries
    ns2: ZSeries
    nc2: ZSeries
    nd2: ZSeries
    dn2: ZSeries


def sn_series(truncation: int) -> ZSeries:
    """sn(z, k) = z·Σ s_n z^{2n}, exact through z^{truncation+1}."""
    if truncation < 2 or truncation % 2:
        raise ValueError(f"sn truncation must be an even integer >= 2, got {truncation}")
    return _sn_series(truncation)


@lru_cache(maxsize=16)
def _sn_series(truncation: int) -> ZSeries:
    s: List[ModPoly] = [ModPoly.one()]
    # q[n]: coefficient of z^{2n+2} in sn²
    q: List[ModPoly] = []
    two_k2 = K2 * 2
    for n in range(truncation // 2):
        if n >= 1:
            q.append(sum_of_products((s[a], s[n - 1 - a]) for a in range(n)))
            cube = sum_of_products((s[a], q[n - 1 - a]) for a in range(n))
        else:
            cube = ModPoly.zero()
        rhs = two_k2 * cube - ONE_PLUS_K2 * s[n]
        s.append(rhs / ((2 * n + 3) * (2 * n + 2)))
    return ZSeries(0, tuple(s), truncation + 1, odd=True)


@lru_cache(maxsize=8)
def glaisher_series(max_j: int) -> GlaisherSeries:
    """All four squares, exact at least through z^{2·max_j}."""
    if max_j < 1:
        raise ValueError(f"max_j must be >= 1, got {max_j}")
    sn = sn_series(2 * max_j + 2)
    sn2 = sn.square()
    ns2 = sn2.reciprocal()
    cn2 = 1 - sn2
    dn2 = 1 - sn2 * K2
    return GlaisherSeries(
        sn=sn,
        sn2=sn2,
        ns2=ns2,
        nc2=cn2.reciprocal(),
        nd2=dn2.reciprocal(),
        dn2=dn2,
    )


@lru_cache(maxsize=8)
def build_laurent_table(max_j: int) -> LaurentCoeffTable:
    series = glaisher_series(max_j)
    c, d, e, f = {}, {}, {}, {}
    for j in range(1, max_j + 1):
        exponent = 2 * j
        c[j] = series.ns2.coefficient(exponent)
        d[j] = ONE_MINUS_K2 * series.nd2.coefficient(exponent)
        e[j] = ONE_MINUS_K2 * series.nc2.coefficient(exponent)
        f[j] = series.dn2.coefficient(exponent)
    logger.info(f"Built Laurent table c, d, e, f up to j={max_j}")
    return LaurentCoeffTable(max_j=max_j, c=c, d=d, e=e, f=f)


@lru_cache(maxsize=8)
def build_trig_table(max_j: int) -> TrigCoeffTable:
    if max_j < 0:
        raise ValueError(f"max_j must be >= 0, got {max_j}")
    a, b = {}, {}
    for j in range(max_j + 1):
        n = 2 * j + 2
        base = Fraction((-1) ** j * (2 * j + 1) * 2 ** n, factorial(n)) * bernoulli(n)
        a[j] = base
        b[j] = base * (2 ** n - 1)
    return TrigCoeffTable(max_j=max_j, a=a, b=b)


def cdef_combination(table: LaurentCoeffTable, j: int) -> ModPoly:
    """(2^{2j+2} - 1)·c_j + d_j - e_j + f_j."""
    if not 1 <= j <= table.max_j:
        raise ValueError(f"j={j} outside the table range 1..{table.max_j}")
    return table.c[j] * (2 ** (2 * j + 2) - 1) + table.d[j] - table.e[j] + table.f[j]


def check_cdef_identity(table: LaurentCoeffTable, j: int) -> bool:
    return cdef_combination(table, j).is_zero


def sn_ode_residual(truncation: int) -> List[int]:
    """Exponents below the truncation where sn'' + (1+k²)sn - 2k²sn³ fails to vanish."""
    sn = sn_series(truncation)
    second = sn.derivative().derivative()
    rhs = sn * (-ONE_PLUS_K2) + (sn.square() * sn) * (K2 * 2)
    return (second - rhs).nonzero_exponents()


def doubling_identity_residual(max_j: int) -> List[int]:
    """
    Exponents where 4·ns²(2z) and
    (1-k²)(nc² - nd²) + (ns² - dn²) + (2+k²) disagree, through z^{2·max_j}.
    """
    series = glaisher_series(max_j)
    lhs = series.ns2.rescale(2) * 4
    rhs = (series.nc2 - series.nd2) * ONE_MINUS_K2 + (series.ns2 - series.dn2) + TWO_PLUS_K2
    return (lhs - rhs).nonzero_exponents()
