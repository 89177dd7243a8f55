"""
Exact relation system for the 4m series Φ₂ₛ, Φ*₂ₛ, Ψ₂ₛ, Ψ*₂ₛ (s = 1..m).

Each series is written in the coordinates x₁..x₄ₘ:

    x₁ = 1, x₂ = X², x₃ = X²(2k²-1), x₄ = X²(6E/K-5+4k²),     X = 2K/π
    x_{4J-3..4J} = X^{2J}·(Θ⁻, Θ⁺, Λ⁻, Λ⁺)_{J-1}   for J even
    x_{4J-3..4J} = X^{2J}·(Θ⁺, Θ⁻, Λ⁺, Λ⁻)_{J-1}   for J odd

The block matrix has four rational rows (the R blocks) followed by one row of
polynomial entries w_ν⁽ˢ⁾·P_ν⁽ˢ⁾ per ν = 1..m-1. The scalar form splits every
polynomial row into its k²-coefficient rows; its right kernel is V_m.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra import ModPoly, rank, rat_to_str
from ..models import SERIES_KINDS, SeriesKind
from ..series import (
    AuxFamily,
    AuxPolySet,
    TrigCoeffTable,
    build_aux,
    build_laurent_table,
    build_trig_table,
)
from ..utils.logger import get_logger

__all__ = [
    "sigma",
    "WeightTable",
    "weights",
    "BlockR",
    "block_R",
    "AuxTerm",
    "AssembledMatrix",
    "assemble",
    "assemble_for",
    "CoordinateFrame",
    "coordinate_frame",
    "column_index",
    "column_label",
    "p_term",
    "slot_of",
    "QuasiPeriodCertificate",
    "quasi_periodicity_certificate",
    "quasi_periodicity_check",
]

logger = get_logger("relations.relation_matrix")

Entry = Union[Fraction, ModPoly]

# P_ν⁽ˢ⁾ per column kind: (sign, family) for s even and s odd.
_P_EVEN = {
    SeriesKind.PHI: (-1, AuxFamily.THETA_MINUS),
    SeriesKind.PHI_STAR: (1, AuxFamily.THETA_PLUS),
    SeriesKind.PSI: (-1, AuxFamily.LAMBDA_MINUS),
    SeriesKind.PSI_STAR: (1, AuxFamily.LAMBDA_PLUS),
}
_P_ODD = {
    SeriesKind.PHI: (-1, AuxFamily.THETA_PLUS),
    SeriesKind.PHI_STAR: (1, AuxFamily.THETA_MINUS),
    SeriesKind.PSI: (1, AuxFamily.LAMBDA_PLUS),
    SeriesKind.PSI_STAR: (-1, AuxFamily.LAMBDA_MINUS),
}

_SLOTS_J_EVEN = (AuxFamily.THETA_MINUS, AuxFamily.THETA_PLUS, AuxFamily.LAMBDA_MINUS, AuxFamily.LAMBDA_PLUS)
_SLOTS_J_ODD = (AuxFamily.THETA_PLUS, AuxFamily.THETA_MINUS, AuxFamily.LAMBDA_PLUS, AuxFamily.LAMBDA_MINUS)


def column_index(kind: SeriesKind, s: int) -> int:
    """Zero-based column of the series of the given kind at 2s."""
    return 4 * (s - 1) + SeriesKind(kind).offset


def column_label(col: int) -> str:
    s, offset = divmod(col, 4)
    kind = SERIES_KINDS[offset]
    base = "Phi" if kind.is_phi else "Psi"
    star = "*" if kind.is_alternating else ""
    return f"{base}{star}_{2 * (s + 1)}"


@lru_cache(maxsize=None)
def _sigma_row(s: int) -> Tuple[int, ...]:
    # coefficients of prod_{r=1}^{s-1} (1 - r² x)
    coeffs = [1]
    for r in range(1, s):
        nxt = coeffs + [0]
        for i in range(len(coeffs)):
            nxt[i + 1] -= r * r * coeffs[i]
        coeffs = nxt
    return tuple(coeffs)


def sigma(i: int, s: int) -> Fraction:
    """σᵢ(s): signed elementary symmetric function of 1², 2², ..., (s-1)²."""
    if s < 1 or i < 0:
        raise ValueError(f"sigma needs s >= 1 and i >= 0, got i={i}, s={s}")
    row = _sigma_row(s)
    return Fraction(row[i]) if i < len(row) else Fraction(0)


@dataclass(frozen=True)
class WeightTable:
    m: int
    sigma: Dict[Tuple[int, int], Fraction]
    w: Dict[Tuple[int, int], Fraction]
    w_hat: Dict[int, Fraction]

    def weight(self, j: int, s: int) -> Fraction:
        """w_j⁽ˢ⁾; zero outside 1 <= j <= s-1."""
        return self.w.get((j, s), Fraction(0))


def _w(j: int, s: int) -> Fraction:
    return (-1) ** j * sigma(s - j - 1, s) * Fraction(factorial(2 * j), 2 ** (2 * j + 3) * factorial(2 * s - 1))


def _w_hat(s: int) -> Fraction:
    return Fraction(factorial(s - 1) ** 2, 24 * factorial(2 * s - 1))


def weights(m: int) -> WeightTable:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return WeightTable(
        m=m,
        sigma={(i, s): sigma(i, s) for s in range(1, m + 1) for i in range(s)},
        w={(j, s): _w(j, s) for s in range(1, m + 1) for j in range(1, s)},
        w_hat={s: _w_hat(s) for s in range(1, m + 1)},
    )


@dataclass(frozen=True)
class BlockR:
    """Rational 4×4 block of column group s: rows x₁..x₄, columns Φ, Φ*, Ψ, Ψ*."""
    s: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def first_row(self) -> Tuple[Fraction, ...]:
        return self.entries[0]

    @property
    def rank(self) -> int:
        return rank(self.entries, 4)

    def to_json(self) -> List[List[str]]:
        return [[rat_to_str(x) for x in row] for row in self.entries]


def block_R(s: int, trig: TrigCoeffTable, wt: WeightTable) -> BlockR:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if trig.max_j < s - 1 or wt.m < s:
        raise ValueError(f"tables too shallow for s={s}")
    wh = wt.w_hat[s]
    sum_a = sum((trig.a[j] * wt.weight(j, s) for j in range(1, s)), Fraction(0))
    sum_b = sum((trig.b[j] * wt.weight(j, s) for j in range(1, s)), Fraction(0))
    r_phi = (-1) ** (s + 1) * wh + sum_a
    r_psi = -3 * wh + (-1) ** s * sum_b
    z = Fraction(0)
    if s % 2 == 0:
        rows = (
            (r_phi, -r_phi, r_psi, -r_psi),
            (z, z, z, -3 * wh),
            (z, wh, -2 * wh, z),
            (wh, z, wh, z),
        )
    else:
        rows = (
            (r_phi, -r_phi, r_psi, -r_psi),
            (z, z, 3 * wh, z),
            (wh, z, z, 2 * wh),
            (z, wh, z, -wh),
        )
    return BlockR(s=s, entries=rows)


@dataclass(frozen=True)
class AuxTerm:
    """Symbolic polynomial entry sign·weight·family_j."""
    weight: Fraction
    family: AuxFamily
    j: int
    sign: int

    @property
    def coefficient(self) -> Fraction:
        return self.sign * self.weight

    def poly(self, aux: AuxPolySet) -> ModPoly:
        return aux.poly(self.family, self.j) * self.coefficient

    def label(self) -> str:
        name = "Theta" if self.family in (AuxFamily.THETA_MINUS, AuxFamily.THETA_PLUS) else "Lambda"
        pm = "-" if self.family in (AuxFamily.THETA_MINUS, AuxFamily.LAMBDA_MINUS) else "+"
        return f"{rat_to_str(self.coefficient)}*{name}{pm}_{self.j}"


def p_term(kind: SeriesKind, nu: int, s: int, wt: WeightTable) -> Optional[AuxTerm]:
    if not 1 <= nu <= s - 1:
        return None
    sign, family = (_P_EVEN if s % 2 == 0 else _P_ODD)[SeriesKind(kind)]
    return AuxTerm(weight=wt.weight(nu, s), family=family, j=nu, sign=sign)


def slot_of(family: AuxFamily, big_j: int) -> int:
    """Zero-based coordinate index of X^{2J}·family_{J-1}."""
    slots = _SLOTS_J_EVEN if big_j % 2 == 0 else _SLOTS_J_ODD
    return 4 * (big_j - 1) + slots.index(AuxFamily(family))


@dataclass(frozen=True)
class AssembledMatrix:
    m: int
    r_blocks: Tuple[BlockR, ...]
    terms: Tuple[Tuple[Optional[AuxTerm], ...], ...]
    aux: AuxPolySet = field(repr=False, compare=False)

    @property
    def n_cols(self) -> int:
        return 4 * self.m

    @property
    def n_block_rows(self) -> int:
        return self.m + 3

    def r_row(self, i: int) -> List[Fraction]:
        return [x for block in self.r_blocks for x in block.entries[i]]

    def poly_row(self, nu: int) -> List[ModPoly]:
        return [t.poly(self.aux) if t is not None else ModPoly.zero() for t in self.terms[nu - 1]]

    @property
    def blocks(self) -> List[List[Entry]]:
        """The (m+3)×4m block form: four rational rows then m-1 polynomial rows."""
        rows: List[List[Entry]] = [self.r_row(i) for i in range(4)]
        rows.extend(self.poly_row(nu) for nu in range(1, self.m))
        return rows

    def leading_zeros(self, nu: int) -> int:
        count = 0
        for t in self.terms[nu - 1]:
            if t is not None and t.coefficient != 0:
                break
            count += 1
        return count

    def scalar_rows(self) -> Tuple[List[List[Fraction]], List[str]]:
        rows = [self.r_row(i) for i in range(4)]
        labels = ["x1", "x2", "x3", "x4"]
        for nu in range(1, self.m):
            polys = self.poly_row(nu)
            for i in range(nu + 2):
                rows.append([p.coefficient(i) for p in polys])
                labels.append(f"X^{2 * nu + 2}*k^{2 * i}")
        return rows, labels

    @property
    def scalar_form(self) -> List[List[Fraction]]:
        return self.scalar_rows()[0]

    def linear_form(self, col: int) -> List[Fraction]:
        """Column col as coefficients on x₁..x₄ₘ."""
        coeffs = [Fraction(0)] * self.n_cols
        s = col // 4 + 1
        for i in range(4):
            coeffs[i] = self.r_blocks[s - 1].entries[i][col % 4]
        for nu in range(1, self.m):
            t = self.terms[nu - 1][col]
            if t is not None:
                coeffs[slot_of(t.family, nu + 1)] += t.coefficient
        return coeffs

    def to_json(self, scalar: bool = False) -> dict:
        block_rows = [[rat_to_str(x) for x in self.r_row(i)] for i in range(4)]
        for nu in range(1, self.m):
            block_rows.append([
                {"term": t.label(), "poly": t.poly(self.aux).to_json()} if t is not None
                else {"term": "0", "poly": []}
                for t in self.terms[nu - 1]
            ])
        doc = {
            "m": self.m,
            "rows": self.n_block_rows,
            "cols": self.n_cols,
            "column_labels": [column_label(c) for c in range(self.n_cols)],
            "blocks": block_rows,
        }
        if scalar:
            rows, labels = self.scalar_rows()
            doc["scalar"] = {
                "row_labels": labels,
                "rows": [[rat_to_str(x) for x in row] for row in rows],
            }
        return doc


def assemble(m: int, aux: AuxPolySet, wt: WeightTable, trig: TrigCoeffTable) -> AssembledMatrix:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if aux.max_j < m - 1 or trig.max_j < m - 1 or wt.m < m:
        raise ValueError(
            f"tables too shallow for m={m}: aux.max_j={aux.max_j}, trig.max_j={trig.max_j}, weights.m={wt.m}"
        )
    r_blocks = tuple(block_R(s, trig, wt) for s in range(1, m + 1))
    terms = tuple(
        tuple(p_term(kind, nu, s, wt) for s in range(1, m + 1) for kind in SERIES_KINDS)
        for nu in range(1, m)
    )
    matrix = AssembledMatrix(m=m, r_blocks=r_blocks, terms=terms, aux=aux)
    logger.debug(f"Assembled relation matrix for m={m}: {matrix.n_block_rows}x{matrix.n_cols} blocks")
    return matrix


@lru_cache(maxsize=32)
def assemble_for(m: int) -> AssembledMatrix:
    """assemble() with freshly built tables of exactly the needed depth."""
    depth = max(1, m - 1)
    aux = build_aux(build_laurent_table(depth))
    return assemble(m, aux, weights(m), build_trig_table(depth))


@dataclass(frozen=True)
class CoordinateFrame:
    m: int
    labels: Tuple[str, ...]

    def __len__(self) -> int:
        return len(self.labels)


def coordinate_frame(m: int) -> CoordinateFrame:
    labels = ["1", "X^2", "X^2*(2k^2-1)", "X^2*(6E/K-5+4k^2)"]
    for big_j in range(2, m + 1):
        slots = _SLOTS_J_EVEN if big_j % 2 == 0 else _SLOTS_J_ODD
        for fam in slots:
            labels.append(f"X^{2 * big_j}*{fam.value}_{big_j - 1}")
    return CoordinateFrame(m=m, labels=tuple(labels))


@dataclass(frozen=True)
class QuasiPeriodCertificate:
    nu: int
    s_base: int
    s_shift: int
    permutation: Tuple[int, ...]
    ratios: Tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "nu": self.nu,
            "s_base": self.s_base,
            "s_shift": self.s_shift,
            "permutation": list(self.permutation),
            "ratios": [rat_to_str(r) for r in self.ratios],
        }


def _poly_ratio(target: ModPoly, base: ModPoly) -> Optional[Fraction]:
    if base.is_zero:
        return None
    r = target.coefficient(base.degree) / base.coefficient(base.degree)
    return r if target == base * r else None


def quasi_periodicity_certificate(matrix: AssembledMatrix, nu: int, l: int) -> Optional[QuasiPeriodCertificate]:
    """
    Match the 4-entry group of row ν at s = ν+1 with the group at s = ν+1+l.

    Entry i of the base group maps to entry permutation[i] of the shifted
    group with shifted = ratios[i]·base; all ratios share one absolute value.
    Returns None when no such matching exists.
    """
    m = matrix.m
    if m < 3 or not 1 <= nu <= m - 2 or not 1 <= l <= m - nu - 1:
        raise ValueError(f"quasi-periodicity indices out of range: m={m}, nu={nu}, l={l}")
    row = matrix.poly_row(nu)
    s_base, s_shift = nu + 1, nu + 1 + l
    base = row[4 * (s_base - 1): 4 * s_base]
    shifted = row[4 * (s_shift - 1): 4 * s_shift]
    permutation: List[int] = []
    ratios: List[Fraction] = []
    for entry in base:
        match = None
        for idx, candidate in enumerate(shifted):
            if idx in permutation:
                continue
            r = _poly_ratio(candidate, entry)
            if r is not None:
                match = (idx, r)
                break
        if match is None:
            return None
        permutation.append(match[0])
        ratios.append(match[1])
    if len({abs(r) for r in ratios}) != 1:
        return None
    return QuasiPeriodCertificate(nu, s_base, s_shift, tuple(permutation), tuple(ratios))


def quasi_periodicity_check(matrix: AssembledMatrix, nu: int, l: int) -> bool:
    return quasi_periodicity_certificate(matrix, nu, l) is not None
