"""
Numeric certification of exact results: relation residuals under direct
summation, closed forms against summation, the doubling identity of the
Glaisher functions at random points, and the quartic Fibonacci identity.
"""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from ..models import SERIES_KINDS, SeriesKind
from ..relations import assemble_for, column_index, format_relation, relation_space
from ..series import build_aux, build_laurent_table, build_trig_table
from ..utils.errors import PoleProximityError
from ..utils.logger import get_logger
from .closed_forms import coordinate_values, eval_closed_form, eval_from_column
from .elliptic import check_lemma54, make_context, nome_to_elliptic
from .sequences import ResolvedSequence, resolve_sequence
from .series_sum import SeriesValue, sum_series, terms_needed

__all__ = [
    "RelationResidual",
    "VerificationReport",
    "series_values",
    "relation_residual",
    "verify_relations",
    "ClosedFormCheck",
    "check_closed_forms_numeric",
    "LemmaPoint",
    "check_lemma54_points",
    "check_fib8",
    "fib8_rhs",
]

logger = get_logger("numeric.verify")


@dataclass
class RelationResidual:
    index: int
    text: str
    residual: object
    passed: bool


@dataclass
class VerificationReport:
    m: int
    sequence: str
    precision: int
    guard_digits: int
    tolerance: object
    residuals: List[RelationResidual] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.residuals)

    def to_json(self, nstr) -> dict:
        return {
            "m": self.m,
            "sequence": self.sequence,
            "precision": self.precision,
            "guard_digits": self.guard_digits,
            "tolerance": nstr(self.tolerance, 5),
            "passed": self.passed,
            "relations": [
                {"index": r.index, "relation": r.text, "residual": nstr(r.residual, 5), "passed": r.passed}
                for r in self.residuals
            ],
        }


def _shared_context(sequence: ResolvedSequence, precision: int, guard_digits: int):
    # s = 1 needs the most terms and therefore the largest guard
    estimate_ctx = make_context(precision, guard_digits + 10)
    _, guard = terms_needed(estimate_ctx, sequence.beta(estimate_ctx), 1, precision, guard_digits)
    return make_context(precision, guard + 10), guard


def series_values(sequence: ResolvedSequence, m: int, precision: int, guard_digits: int = 10,
                  ctx=None, progress: bool = False) -> Dict[Tuple[SeriesKind, int], SeriesValue]:
    if ctx is None:
        ctx, _ = _shared_context(sequence, precision, guard_digits)
    keys = [(kind, s) for s in range(1, m + 1) for kind in SERIES_KINDS]
    values = {}
    for kind, s in tqdm(keys, desc="Summing series", disable=not progress):
        values[(kind, s)] = sum_series(sequence, s, kind, precision, guard_digits, ctx=ctx)
    return values


def relation_residual(t, m: int, values: Dict[Tuple[SeriesKind, int], SeriesValue]):
    """|Σ tᵢ·ξᵢ| / max|tᵢ|."""
    scale = max(abs(x) for x in t)
    total = None
    for s in range(1, m + 1):
        for kind in SERIES_KINDS:
            coeff = t[column_index(kind, s)]
            if coeff:
                term = coeff * values[(kind, s)].value
                total = term if total is None else total + term
    if total is None:
        return 0
    return abs(total) / scale


def verify_relations(m: int, selector: str = "fibonacci", precision: int = 60, guard_digits: int = 10,
                     cross_check_max_m: int = 6, progress: bool = False) -> VerificationReport:
    sequence = resolve_sequence(selector)
    basis = relation_space(m, cross_check_max_m)
    ctx, guard = _shared_context(sequence, precision, guard_digits)
    values = series_values(sequence, m, precision, guard_digits, ctx=ctx, progress=progress)
    tol = ctx.mpf(10) ** (guard - precision)
    report = VerificationReport(m=m, sequence=sequence.name, precision=precision,
                                guard_digits=guard, tolerance=tol)
    for i, v in enumerate(basis.vectors, 1):
        residual = relation_residual(v.t, m, values)
        report.residuals.append(RelationResidual(i, format_relation(v), residual, residual < tol))
    status = "passed" if report.passed else "FAILED"
    logger.info(f"Numeric verification for m={m} on {sequence.name} {status}")
    return report


@dataclass
class ClosedFormCheck:
    s: int
    kind: SeriesKind
    direct: object
    closed: object
    from_column: object
    difference: object
    passed: bool


def check_closed_forms_numeric(max_s: int, selector: str = "fibonacci", precision: int = 80,
                               guard_digits: int = 10, progress: bool = False) -> Tuple[List[ClosedFormCheck], object]:
    """Closed forms and matrix columns against direct summation for s <= max_s."""
    if max_s < 1:
        raise ValueError(f"max_s must be >= 1, got {max_s}")
    sequence = resolve_sequence(selector)
    ctx, guard = _shared_context(sequence, precision, guard_digits)
    beta = sequence.beta(ctx)
    ectx = nome_to_elliptic(beta * beta, precision, guard, ctx=ctx)
    depth = max(1, max_s - 1)
    aux = build_aux(build_laurent_table(depth))
    trig = build_trig_table(depth)
    matrix = assemble_for(max_s)
    coords = coordinate_values(max_s, ectx, aux)
    values = series_values(sequence, max_s, precision, guard_digits, ctx=ctx, progress=progress)
    tol = ctx.mpf(10) ** (guard - precision)

    checks = []
    for (kind, s), direct in values.items():
        closed = eval_closed_form(s, kind, ectx, aux, trig)
        from_column = eval_from_column(matrix, column_index(kind, s), coords)
        diff = max(abs(closed - direct.value), abs(from_column - direct.value))
        checks.append(ClosedFormCheck(s, kind, direct.value, closed, from_column, diff, diff < tol))
    return checks, tol


@dataclass
class LemmaPoint:
    z: complex
    k2: float
    residual: object
    passed: bool


def check_lemma54_points(points: int = 20, seed: int = 0, precision: int = 100, guard_digits: int = 10,
                         pole_threshold: str = "1e-20") -> Tuple[List[LemmaPoint], object]:
    """The doubling identity at random admissible points; the first point has k² = 0."""
    rng = random.Random(seed)
    ctx = make_context(precision, guard_digits)
    tol = ctx.mpf(10) ** (guard_digits - precision)
    results = []
    while len(results) < points:
        z = complex(rng.uniform(0.05, 1.2), rng.uniform(-0.6, 0.6))
        k2 = 0.0 if not results else rng.uniform(0.0, 0.95)
        try:
            residual = check_lemma54(z, k2, precision, guard_digits, pole_threshold)
        except PoleProximityError:
            logger.debug(f"Skipping z={z}, k2={k2}: too close to a pole")
            continue
        results.append(LemmaPoint(z, k2, residual, residual < tol))
    return results, tol


def fib8_rhs(x, y, z):
    """15y/14 + P(x, z)/(378(4x+5)²) for the Fibonacci sums x, y, z of 1/F^2, 1/F^4, 1/F^6."""
    poly = (256 * x ** 6 - 3456 * x ** 5 + 2880 * x ** 4 + 1792 * x ** 3 * z - 11100 * x ** 3
            + 20160 * x ** 2 * z - 10125 * x ** 2 + 7560 * x * z + 3136 * z ** 2 - 1050 * z)
    return 15 * y / 14 + poly / (378 * (4 * x + 5) ** 2)


def check_fib8(precision: int = 50, guard_digits: int = 10):
    """|Σ1/F_n⁸ - fib8_rhs(x, y, z)|."""
    if precision < 30:
        raise ValueError(f"precision must be >= 30, got {precision}")
    sequence = resolve_sequence("fibonacci")
    ctx, _ = _shared_context(sequence, precision, guard_digits)
    raw = {}
    for s in (1, 2, 3, 4):
        value = sum_series(sequence, s, SeriesKind.PHI, precision, guard_digits, ctx=ctx).value
        raw[s] = value * 5 ** s
    return abs(raw[4] - fib8_rhs(raw[1], raw[2], raw[3]))
