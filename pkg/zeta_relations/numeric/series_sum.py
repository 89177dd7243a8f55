"""
Direct summation of Φ₂ₛ, Φ*₂ₛ, Ψ₂ₛ, Ψ*₂ₛ with a certified geometric tail.

Both |α^n - β^n| and |α^n + β^n| are at least |β|^{-n}(1 - β²), so the tail
after N terms is bounded by (1 - β²)^{-2s}·|β|^{2s(N+1)} / (1 - |β|^{2s}).
"""

from dataclasses import dataclass
from math import ceil, log10
from typing import Optional, Union

from mpmath.ctx_mp import MPContext

from ..models import SeriesKind
from ..utils.logger import get_logger
from .elliptic import make_context
from .sequences import ResolvedSequence, gen_terms

__all__ = ["SeriesValue", "tail_bound", "terms_needed", "sum_series"]

logger = get_logger("numeric.series_sum")


@dataclass(frozen=True)
class SeriesValue:
    kind: SeriesKind
    s: int
    value: object
    terms_used: int
    tail_bound: object
    guard_digits: int


def tail_bound(ctx: MPContext, beta, s: int, n_terms: int):
    b2 = beta * beta
    ab = abs(beta)
    return (1 - b2) ** (-2 * s) * ab ** (2 * s * (n_terms + 1)) / (1 - ab ** (2 * s))


def terms_needed(ctx: MPContext, beta, s: int, precision: int, base_guard: int):
    """
    Smallest N whose tail bound is below 10^{-p-g}, with
    g = base_guard + ceil(log10 N) iterated until it no longer changes.
    """
    guard = base_guard
    for _ in range(8):
        target = ctx.mpf(10) ** (-precision - guard)
        log_b = ctx.log(abs(beta))
        # first guess from the dominant factor, then walk up
        n = max(1, int(ctx.ceil(ctx.log(target) / (2 * s * log_b))))
        while tail_bound(ctx, beta, s, n) >= target:
            n += 1
        new_guard = base_guard + ceil(log10(n)) if n > 1 else base_guard
        if new_guard == guard:
            return n, guard
        guard = new_guard
    return n, guard


def sum_series(sequence: ResolvedSequence, s: int, kind: Union[SeriesKind, str], precision: int,
               guard_digits: int = 10, ctx: Optional[MPContext] = None) -> SeriesValue:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if precision < 10:
        raise ValueError(f"precision must be >= 10, got {precision}")
    kind = SeriesKind(kind)

    estimate_ctx = make_context(precision, guard_digits + 10)
    beta = sequence.beta(estimate_ctx)
    n_terms, guard = terms_needed(estimate_ctx, beta, s, precision, guard_digits)
    if ctx is None:
        ctx = make_context(precision, guard + 10)

    terms = gen_terms(sequence, n_terms, ctx=ctx)
    seq = terms.u if kind.is_phi else terms.v
    total = ctx.zero
    for n in range(1, n_terms + 1):
        term = 1 / ctx.mpf(seq[n]) ** (2 * s)
        if kind.is_alternating and n % 2 == 0:
            total -= term
        else:
            total += term

    if kind.is_phi:
        # (α - β)^{-2s}
        if sequence.exact:
            total /= ctx.mpf(sequence.discriminant) ** s
        else:
            b = sequence.beta(ctx)
            total /= (b + 1 / b) ** (2 * s)

    bound = tail_bound(ctx, sequence.beta(ctx), s, n_terms)
    logger.debug(f"{kind.value}_{2 * s} for {sequence.name}: {n_terms} terms, tail {ctx.nstr(bound, 3)}")
    return SeriesValue(kind=kind, s=s, value=total, terms_used=n_terms, tail_bound=bound, guard_digits=guard)
