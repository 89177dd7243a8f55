"""
Exact linear algebra over ℚ: fraction-free Gauss–Jordan elimination on
integer rows, rank and canonical right-kernel bases.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

from .rational import RatLike, as_rat

__all__ = ["integer_rows", "row_reduce", "rank", "kernel_basis", "primitive_vector", "mat_vec"]


def _primitive_ints(row: List[int]) -> List[int]:
    g = gcd(*row) if row else 0
    if g > 1:
        return [x // g for x in row]
    return row


def integer_rows(matrix: Sequence[Sequence[RatLike]]) -> List[List[int]]:
    """Scale every row to coprime integers; the row space is unchanged."""
    rows = []
    for row in matrix:
        values = [as_rat(x) for x in row]
        den = lcm(*(v.denominator for v in values)) if values else 1
        rows.append(_primitive_ints([v.numerator * (den // v.denominator) for v in values]))
    return rows


def row_reduce(matrix: Sequence[Sequence[RatLike]], n_cols: int = None) -> Tuple[List[List[int]], List[int]]:
    """
    Reduced row echelon form with integer rows (each pivot row divided by its
    content, so pivots are not normalised to 1). Returns (rows, pivot columns).
    """
    rows = [r for r in integer_rows(matrix) if any(r)]
    if n_cols is None:
        n_cols = len(matrix[0]) if matrix else 0
    pivots: List[int] = []
    r = 0
    for col in range(n_cols):
        candidates = [i for i in range(r, len(rows)) if rows[i][col]]
        if not candidates:
            continue
        # smallest pivot keeps the integers short
        p = min(candidates, key=lambda i: abs(rows[i][col]))
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[col]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][col]
            if not f:
                continue
            g = gcd(pv, f)
            a, b = pv // g, f // g
            rows[i] = _primitive_ints([a * x - b * y for x, y in zip(rows[i], prow)])
        pivots.append(col)
        r += 1
        rows = rows[:r] + [row for row in rows[r:] if any(row)]
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Sequence[Sequence[RatLike]], n_cols: int = None) -> int:
    return len(row_reduce(matrix, n_cols)[1])


def primitive_vector(vector: Sequence[RatLike]) -> Tuple[int, ...]:
    """Integer multiple with gcd 1 whose last nonzero entry is positive."""
    values = [as_rat(x) for x in vector]
    nonzero = [v for v in values if v != 0]
    if not nonzero:
        return tuple(0 for _ in values)
    den = lcm(*(v.denominator for v in nonzero))
    ints = [v.numerator * (den // v.denominator) for v in values]
    g = gcd(*ints)
    sign = 1 if nonzero[-1] > 0 else -1
    return tuple(sign * x // g for x in ints)


def kernel_basis(matrix: Sequence[Sequence[RatLike]], n_cols: int = None) -> List[Tuple[int, ...]]:
    """
    Canonical basis of the right nullspace.

    One vector per free column f of the reduced form: it has its last nonzero
    entry at f and vanishes on every other free column. The basis is sorted by
    f and each vector is made primitive with a positive last entry, so the
    result depends only on the row space of ``matrix``.
    """
    if n_cols is None:
        n_cols = len(matrix[0]) if matrix else 0
    rows, pivots = row_reduce(matrix, n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row, col in zip(rows, pivots):
            if row[free]:
                vec[col] = Fraction(-row[free], row[col])
        basis.append(primitive_vector(vec))
    return basis


def mat_vec(matrix: Sequence[Sequence[RatLike]], vector: Sequence[RatLike]) -> List[Fraction]:
    vec = [as_rat(v) for v in vector]
    return [sum((as_rat(a) * v for a, v in zip(row, vec)), Fraction(0)) for row in matrix]
