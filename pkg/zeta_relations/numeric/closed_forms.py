"""
Numeric evaluation of the closed forms of Φ₂ₛ, Φ*₂ₛ, Ψ₂ₛ, Ψ*₂ₛ in terms of
X = 2K/π, E/K, k² and the exact tables, either from the explicit formulas or
from a column of the relation matrix against the coordinates x₁..x₄ₘ.
"""

from fractions import Fraction
from typing import List, Union

from ..algebra import ModPoly
from ..models import SeriesKind
from ..relations import AssembledMatrix, slot_of, weights
from ..series import AuxFamily, AuxPolySet, TrigCoeffTable
from .elliptic import EllipticContext

__all__ = ["to_mpf", "eval_poly", "eval_closed_form", "coordinate_values", "eval_from_column"]


def to_mpf(ctx, value: Fraction):
    value = Fraction(value)
    return ctx.mpf(value.numerator) / value.denominator


def eval_poly(ctx, p: ModPoly, x):
    acc = ctx.zero
    for c in reversed(p.coeffs):
        acc = acc * x + to_mpf(ctx, c)
    return acc


def eval_closed_form(s: int, kind: Union[SeriesKind, str], ectx: EllipticContext,
                     aux: AuxPolySet, trig: TrigCoeffTable):
    kind = SeriesKind(kind)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if s > 1 and (aux.max_j < s - 1 or trig.max_j < s - 1):
        raise ValueError(f"tables too shallow for s={s}")

    ctx = ectx.ctx
    X2 = ectx.X ** 2
    k2 = ectx.k2
    ek = ectx.E / ectx.K
    wt = weights(s)
    wh = to_mpf(ctx, wt.w_hat[s])
    even = s % 2 == 0

    def wsum(const, family: AuxFamily, sign: int):
        # Σ w_j (const_j - X^{2j+2}·family_j), times sign
        total = ctx.zero
        for j in range(1, s):
            poly = eval_poly(ctx, aux.poly(family, j), k2)
            total += to_mpf(ctx, wt.weight(j, s)) * (to_mpf(ctx, const[j]) - X2 ** (j + 1) * poly)
        return sign * total

    theta_e = 1 - X2 * (6 * ek - 5 + 4 * k2)
    theta_o = 1 - X2 * (1 - 2 * k2)
    lam_e = 1 + X2 * (1 - 2 * ek)
    lam_o = X2 - 1

    if kind == SeriesKind.PHI:
        if even:
            return -wh * theta_e + wsum(trig.a, AuxFamily.THETA_MINUS, 1)
        return wh * theta_o + wsum(trig.a, AuxFamily.THETA_PLUS, 1)
    if kind == SeriesKind.PHI_STAR:
        if even:
            return wh * theta_o + wsum(trig.a, AuxFamily.THETA_PLUS, -1)
        return -wh * theta_e + wsum(trig.a, AuxFamily.THETA_MINUS, -1)
    if kind == SeriesKind.PSI:
        if even:
            return -3 * wh * lam_e + wsum(trig.b, AuxFamily.LAMBDA_MINUS, 1)
        return 3 * wh * lam_o + wsum(trig.b, AuxFamily.LAMBDA_PLUS, -1)
    if even:
        return -3 * wh * lam_o + wsum(trig.b, AuxFamily.LAMBDA_PLUS, -1)
    return 3 * wh * lam_e + wsum(trig.b, AuxFamily.LAMBDA_MINUS, 1)


def coordinate_values(m: int, ectx: EllipticContext, aux: AuxPolySet) -> List:
    """Numeric x₁..x₄ₘ in the order of coordinate_frame(m)."""
    if m > 1 and aux.max_j < m - 1:
        raise ValueError(f"aux table too shallow for m={m}")
    ctx = ectx.ctx
    X2 = ectx.X ** 2
    k2 = ectx.k2
    ek = ectx.E / ectx.K
    values = [ctx.one, X2, X2 * (2 * k2 - 1), X2 * (6 * ek - 5 + 4 * k2)]
    values.extend([ctx.zero] * (4 * (m - 1)))
    for big_j in range(2, m + 1):
        power = X2 ** big_j
        for family in AuxFamily:
            values[slot_of(family, big_j)] = power * eval_poly(ctx, aux.poly(family, big_j - 1), k2)
    return values


def eval_from_column(matrix: AssembledMatrix, col: int, coords: List):
    """Value of the series in column col as its linear form in x₁..x₄ₘ."""
    ctx_zero = coords[0] * 0
    total = ctx_zero
    for c, x in zip(matrix.linear_form(col), coords):
        if c:
            total += c.numerator * x / c.denominator
    return total
