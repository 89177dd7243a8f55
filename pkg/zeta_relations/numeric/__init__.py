"""
Arbitrary-precision certification with mpmath.
"""

from .sequences import ResolvedSequence, RecurrenceTerms, load_sequences, resolve_sequence, gen_terms
from .elliptic import (
    make_context,
    EllipticContext,
    agm_elliptic,
    nome_to_elliptic,
    JacobiValues,
    jacobi_fn,
    check_lemma54,
)
from .series_sum import SeriesValue, tail_bound, terms_needed, sum_series
from .closed_forms import to_mpf, eval_poly, eval_closed_form, coordinate_values, eval_from_column
from .verify import (
    RelationResidual,
    VerificationReport,
    series_values,
    relation_residual,
    verify_relations,
    ClosedFormCheck,
    check_closed_forms_numeric,
    LemmaPoint,
    check_lemma54_points,
    check_fib8,
    fib8_rhs,
)

__all__ = [
    "ResolvedSequence",
    "RecurrenceTerms",
    "load_sequences",
    "resolve_sequence",
    "gen_terms",
    "make_context",
    "EllipticContext",
    "agm_elliptic",
    "nome_to_elliptic",
    "JacobiValues",
    "jacobi_fn",
    "check_lemma54",
    "SeriesValue",
    "tail_bound",
    "terms_needed",
    "sum_series",
    "to_mpf",
    "eval_poly",
    "eval_closed_form",
    "coordinate_values",
    "eval_from_column",
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
