"""
Relation space V_m: exact kernel of the scalar relation matrix, its
re-verification, and rendering of relations in Φ/Ψ or ζ notation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple, Union

from ..algebra import as_rat, kernel_basis, mat_vec, rank, rat_to_str, RatLike
from ..models import SERIES_KINDS, OutputFormat, RelationStyle, SeriesKind
from ..series import AuxFamily, coefficient_rows, xi_relation_residual
from ..utils.errors import KernelDimensionError, VerificationError
from ..utils.logger import get_logger
from .relation_matrix import AssembledMatrix, assemble_for

__all__ = [
    "kernel_basis",
    "RelationVector",
    "RelationBasis",
    "relation_space",
    "structured_rows",
    "structured_kernel",
    "zero_pattern_check",
    "format_relation",
    "membership_check",
    "DEFAULT_CROSS_CHECK_MAX_M",
]

logger = get_logger("relations.kernel_solver")

DEFAULT_CROSS_CHECK_MAX_M = 6


@dataclass(frozen=True)
class RelationVector:
    """Integer coefficients t₁..t₄ₘ of Σ t·(Φ₂ₛ, Φ*₂ₛ, Ψ₂ₛ, Ψ*₂ₛ) = 0."""
    m: int
    t: Tuple[int, ...]

    def __post_init__(self):
        if len(self.t) != 4 * self.m:
            raise ValueError(f"relation for m={self.m} needs {4 * self.m} entries, got {len(self.t)}")

    def coefficient(self, kind: SeriesKind, s: int) -> int:
        return self.t[4 * (s - 1) + SeriesKind(kind).offset]

    def padded(self, m: int) -> "RelationVector":
        if m < self.m:
            raise ValueError(f"cannot shrink a relation from m={self.m} to m={m}")
        return RelationVector(m, self.t + (0,) * (4 * (m - self.m)))

    @property
    def is_zero(self) -> bool:
        return not any(self.t)

    def to_json(self) -> List[str]:
        return [rat_to_str(Fraction(x)) for x in self.t]


@dataclass(frozen=True)
class RelationBasis:
    m: int
    vectors: Tuple[RelationVector, ...]
    zero_pattern_ok: bool
    dual_path_checked: bool = False

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "dim": self.dim,
            "vectors": [v.to_json() for v in self.vectors],
            "zero_pattern_ok": self.zero_pattern_ok,
        }


def _pattern_ok(t: Sequence[int], m: int) -> bool:
    for s in range(1, m + 1):
        # Ψ* absent for even s, Ψ absent for odd s
        idx = 4 * s - 1 if s % 2 == 0 else 4 * s - 2
        if t[idx] != 0:
            return False
    return True


def zero_pattern_check(basis: RelationBasis) -> bool:
    return all(_pattern_ok(v.t, basis.m) for v in basis.vectors)


def structured_rows(matrix: AssembledMatrix) -> List[List[Fraction]]:
    """
    Rows of the system in the basis (Θ_ν⁺, Λ_ν⁻, Λ_ν⁺) per polynomial row.

    Θ_ν⁻ is eliminated through (2^{2ν+1}-1)Θ_ν⁻ = Λ_ν⁻ - 2^{2ν+1}Θ_ν⁺ after
    checking that identity and the independence of the remaining three.
    """
    aux = matrix.aux
    rows = [matrix.r_row(i) for i in range(4)]
    for nu in range(1, matrix.m):
        if not xi_relation_residual(aux, nu).is_zero:
            raise VerificationError(f"xi relation fails at j={nu}")
        remaining = tuple(aux.poly(f, nu) for f in (AuxFamily.THETA_PLUS, AuxFamily.LAMBDA_MINUS, AuxFamily.LAMBDA_PLUS))
        if rank(coefficient_rows(remaining), 3) != 3:
            raise KernelDimensionError(f"Theta+, Lambda-, Lambda+ dependent at j={nu}")
        p = 2 ** (2 * nu + 1)
        express: Dict[AuxFamily, Tuple[Fraction, Fraction, Fraction]] = {
            AuxFamily.THETA_MINUS: (Fraction(-p, p - 1), Fraction(1, p - 1), Fraction(0)),
            AuxFamily.THETA_PLUS: (Fraction(1), Fraction(0), Fraction(0)),
            AuxFamily.LAMBDA_MINUS: (Fraction(0), Fraction(1), Fraction(0)),
            AuxFamily.LAMBDA_PLUS: (Fraction(0), Fraction(0), Fraction(1)),
        }
        block = [[Fraction(0)] * matrix.n_cols for _ in range(3)]
        for col, term in enumerate(matrix.terms[nu - 1]):
            if term is None:
                continue
            for i, c in enumerate(express[term.family]):
                block[i][col] = c * term.coefficient
        rows.extend(block)
    return rows


def structured_kernel(matrix: AssembledMatrix) -> List[Tuple[int, ...]]:
    return kernel_basis(structured_rows(matrix), matrix.n_cols)


def _scalar_kernel(matrix: AssembledMatrix) -> List[Tuple[int, ...]]:
    rows = matrix.scalar_form
    basis = kernel_basis(rows, matrix.n_cols)
    for v in basis:
        if any(mat_vec(rows, v)):
            raise VerificationError(f"kernel vector {v} does not annihilate the relation matrix")
    return basis


@lru_cache(maxsize=64)
def relation_space(m: int, cross_check_max_m: int = DEFAULT_CROSS_CHECK_MAX_M) -> RelationBasis:
    """Canonical basis of V_m; raises if any exact re-check fails."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    matrix = assemble_for(m)
    logger.info(f"Computing relation space for m={m} ({matrix.n_cols} unknowns)")
    basis = _scalar_kernel(matrix)
    if len(basis) != m:
        raise KernelDimensionError(f"theorem violated: dim V_{m} = {len(basis)}, expected {m}")
    vectors = tuple(RelationVector(m, v) for v in basis)
    pattern = all(_pattern_ok(v.t, m) for v in vectors)
    if not pattern:
        raise VerificationError(f"zero pattern violated for m={m}")
    checked = m <= cross_check_max_m
    if checked:
        structured = structured_kernel(matrix)
        if structured != basis:
            raise VerificationError(f"structured elimination disagrees with scalar kernel for m={m}")
        logger.debug(f"Structured elimination agrees for m={m}")
    logger.info(f"Relation space for m={m} has dimension {len(vectors)}")
    return RelationBasis(m=m, vectors=vectors, zero_pattern_ok=pattern, dual_path_checked=checked)


def membership_check(v: Sequence[RatLike], m: int) -> bool:
    """True iff v lies in the span of relation_space(m)."""
    if len(v) != 4 * m:
        raise ValueError(f"vector length {len(v)} does not match 4m = {4 * m}")
    values = [as_rat(x) for x in v]
    if not any(values):
        return True
    basis = [list(b.t) for b in relation_space(m).vectors]
    return rank(basis + [values], 4 * m) == len(basis)


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_MINUS = "−"


def _symbol(kind: SeriesKind, s: int, style: RelationStyle, fmt: OutputFormat) -> str:
    two_s = 2 * s
    if style == RelationStyle.ZETA_FIBONACCI:
        letter = "F" if kind.is_phi else "L"
        star = "*" if kind.is_alternating else ""
        if fmt == OutputFormat.LATEX:
            star = "^*" if star else ""
            return f"\\zeta_{letter}{star}({two_s})"
        return f"ζ_{letter}{star}({two_s})"
    if fmt == OutputFormat.LATEX:
        name = "\\Phi" if kind.is_phi else "\\Psi"
        star = "^{*}" if kind.is_alternating else ""
        return f"{name}{star}_{{{two_s}}}"
    name = "Φ" if kind.is_phi else "Ψ"
    star = "*" if kind.is_alternating else ""
    return f"{name}{str(two_s).translate(_SUBSCRIPTS)}{star}"


def _styled_coefficients(t: Sequence[int], m: int, style: RelationStyle) -> List[int]:
    if style != RelationStyle.ZETA_FIBONACCI:
        return list(t)
    # ζ_F(2s) = 5^s Φ₂ₛ, so Φ slots pick up 5^{-s}
    scaled = [
        Fraction(x, 5 ** (i // 4 + 1)) if SERIES_KINDS[i % 4].is_phi else Fraction(x)
        for i, x in enumerate(t)
    ]
    den = lcm(*(c.denominator for c in scaled))
    ints = [int(c * den) for c in scaled]
    g = gcd(*ints)
    return [x // g for x in ints] if g > 1 else ints


def _terms(v: RelationVector, style: RelationStyle, fmt: OutputFormat) -> List[Tuple[int, str]]:
    coeffs = _styled_coefficients(v.t, v.m, style)
    out = []
    for i, c in enumerate(coeffs):
        if c:
            out.append((c, _symbol(SERIES_KINDS[i % 4], i // 4 + 1, style, fmt)))
    return out


def format_relation(
    v: RelationVector,
    style: Union[RelationStyle, str] = RelationStyle.PHI_PSI,
    fmt: Union[OutputFormat, str] = OutputFormat.TEXT,
) -> Union[str, dict]:
    style, fmt = RelationStyle(style), OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        coeffs = _styled_coefficients(v.t, v.m, style)
        return {
            "style": style.value,
            "coefficients": [str(c) for c in coeffs],
            "text": format_relation(v, style, OutputFormat.TEXT),
        }
    terms = _terms(v, style, fmt)
    if not terms:
        return "0 = 0"
    minus = "-" if fmt == OutputFormat.LATEX else _MINUS
    parts = []
    for idx, (c, sym) in enumerate(terms):
        mag = "" if abs(c) == 1 else str(abs(c))
        if idx == 0:
            parts.append(f"{minus if c < 0 else ''}{mag}{sym}")
        else:
            parts.append(f" {minus if c < 0 else '+'} {mag}{sym}")
    return "".join(parts) + " = 0"
