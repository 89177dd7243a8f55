"""
Recurrence pairs U_n = (α^n - β^n)/(α - β), V_n = α^n + β^n with αβ = -1.

A sequence is selected by name ("fibonacci", or any entry of
config/sequences.json), by integer trace "trace=<t>" (α + β = t), or by a
decimal root "beta=<x>" with 0 < |x| < 1.
"""

import json
import os
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import Dict, List, Optional, Union

from mpmath.ctx_mp import MPContext

from ..utils.errors import SeriesUndefinedError
from ..utils.logger import get_logger

__all__ = [
    "ResolvedSequence",
    "RecurrenceTerms",
    "load_sequences",
    "resolve_sequence",
    "gen_terms",
]

logger = get_logger("numeric.sequences")

_BUILTIN = {"fibonacci": {"trace": 1, "description": "Fibonacci / Lucas"}}


@dataclass(frozen=True)
class ResolvedSequence:
    """Either an integer trace t = α + β, or a decimal β."""
    name: str
    trace: Optional[int] = None
    beta_text: Optional[str] = None

    @property
    def exact(self) -> bool:
        return self.trace is not None

    @property
    def discriminant(self) -> Optional[int]:
        """(α - β)² = t² + 4 for an integer trace."""
        return self.trace * self.trace + 4 if self.exact else None

    def beta(self, ctx: MPContext):
        if self.exact:
            t = self.trace
            root = ctx.sqrt(t * t + 4)
            # the root of x² - t·x - 1 inside the unit disc
            return (t - root) / 2 if t > 0 else (t + root) / 2
        return ctx.mpf(self.beta_text)

    def alpha(self, ctx: MPContext):
        return -1 / self.beta(ctx)


@dataclass(frozen=True)
class RecurrenceTerms:
    """U_0..U_n_max and V_0..V_n_max (integers when exact, else mpf)."""
    sequence: ResolvedSequence
    u: List[Union[int, object]]
    v: List[Union[int, object]]

    @property
    def n_max(self) -> int:
        return len(self.u) - 1


def load_sequences(config_path: Optional[str] = None) -> Dict[str, dict]:
    if config_path is None:
        config_path = os.path.join(
            os.path.dirname(os.path.dirname(__file__)),
            'config',
            'sequences.json'
        )

    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            return json.load(f).get('sequences', {})
    except FileNotFoundError:
        logger.warning(f"Sequence registry not found at {config_path}, using built-in fibonacci")
        return dict(_BUILTIN)


def resolve_sequence(selector: str, registry: Optional[Dict[str, dict]] = None) -> ResolvedSequence:
    selector = selector.strip()
    if registry is None:
        registry = load_sequences()

    if selector.startswith("trace="):
        try:
            t = int(selector[len("trace="):])
        except ValueError:
            raise ValueError(f"trace must be an integer: {selector!r}")
        if t == 0:
            raise ValueError("trace 0 gives |beta| = 1")
        return ResolvedSequence(name=selector, trace=t)

    if selector.startswith("beta="):
        text = selector[len("beta="):]
        try:
            value = Decimal(text)
        except InvalidOperation:
            raise ValueError(f"beta must be a decimal literal: {selector!r}")
        if not value.is_finite() or value == 0 or abs(value) >= 1:
            raise ValueError(f"beta must satisfy 0 < |beta| < 1, got {text}")
        return ResolvedSequence(name=selector, beta_text=text)

    entry = registry.get(selector)
    if entry is None and selector in _BUILTIN:
        entry = _BUILTIN[selector]
    if entry is None:
        raise ValueError(f"Unknown sequence: {selector}")
    return ResolvedSequence(name=selector, trace=int(entry["trace"]))


def gen_terms(sequence: ResolvedSequence, n_max: int, ctx: Optional[MPContext] = None) -> RecurrenceTerms:
    """X_{n+2} = (α + β)X_{n+1} + X_n from (U_0, U_1) = (0, 1), (V_0, V_1) = (2, α + β)."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")

    if sequence.exact:
        t = sequence.trace
        u, v = [0, 1], [2, t]
    else:
        if ctx is None:
            raise ValueError("a decimal beta needs a precision context")
        b = sequence.beta(ctx)
        t = b - 1 / b
        u, v = [ctx.zero, ctx.one], [ctx.mpf(2), t]

    while len(u) <= n_max:
        u.append(t * u[-1] + u[-2])
        v.append(t * v[-1] + v[-2])

    for n in range(1, n_max + 1):
        if u[n] == 0:
            raise SeriesUndefinedError(f"U_{n} = 0 for {sequence.name}")
        if v[n] == 0:
            raise SeriesUndefinedError(f"V_{n} = 0 for {sequence.name}")

    return RecurrenceTerms(sequence=sequence, u=u[:n_max + 1], v=v[:n_max + 1])
