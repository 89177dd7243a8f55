"""
Auxiliary polynomials Θ_j^± = c_j ± d_j and Λ_j^± = e_j ± f_j, their
low-order coefficient formulas, and the one-dimensional kernel of
t ↦ ⟨t, (-Θ_j^-, Θ_j^+, -Λ_j^-, Λ_j^+)⟩.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from ..algebra import ModPoly, kernel_basis
from ..utils.errors import KernelDimensionError
from ..utils.logger import get_logger
from .elliptic_series import LaurentCoeffTable, build_trig_table

__all__ = [
    "AuxFamily",
    "AuxPolySet",
    "build_aux",
    "kappa",
    "kappa_hat",
    "closed_form_identities",
    "check_closed_forms",
    "coefficient_rows",
    "xi_polynomials",
    "xi_kernel",
    "xi_relation_residual",
]

logger = get_logger("series.aux_polys")


class AuxFamily(str, Enum):
    THETA_MINUS = "theta-"
    THETA_PLUS = "theta+"
    LAMBDA_MINUS = "lambda-"
    LAMBDA_PLUS = "lambda+"


@dataclass(frozen=True)
class AuxPolySet:
    max_j: int
    theta_minus: Dict[int, ModPoly]
    theta_plus: Dict[int, ModPoly]
    lambda_minus: Dict[int, ModPoly]
    lambda_plus: Dict[int, ModPoly]

    def poly(self, family: AuxFamily, j: int) -> ModPoly:
        if not 1 <= j <= self.max_j:
            raise ValueError(f"j={j} outside the stored range 1..{self.max_j}")
        family = AuxFamily(family)
        return {
            AuxFamily.THETA_MINUS: self.theta_minus,
            AuxFamily.THETA_PLUS: self.theta_plus,
            AuxFamily.LAMBDA_MINUS: self.lambda_minus,
            AuxFamily.LAMBDA_PLUS: self.lambda_plus,
        }[family][j]

    # Coefficient accessors use the shifted index: alpha(j, i) is the k^{2i}
    # coefficient of Θ_{j-1}^-, valid for 2 <= j <= max_j + 1.
    def _shifted(self, family: AuxFamily, j: int, i: int) -> Fraction:
        if not 2 <= j <= self.max_j + 1:
            raise ValueError(f"coefficient index j={j} outside 2..{self.max_j + 1}")
        return self.poly(family, j - 1).coefficient(i)

    def alpha(self, j: int, i: int) -> Fraction:
        return self._shifted(AuxFamily.THETA_MINUS, j, i)

    def beta(self, j: int, i: int) -> Fraction:
        return self._shifted(AuxFamily.THETA_PLUS, j, i)

    def gamma(self, j: int, i: int) -> Fraction:
        return self._shifted(AuxFamily.LAMBDA_MINUS, j, i)

    def delta(self, j: int, i: int) -> Fraction:
        return self._shifted(AuxFamily.LAMBDA_PLUS, j, i)


def build_aux(table: LaurentCoeffTable) -> AuxPolySet:
    if table.max_j < 1:
        raise ValueError("Laurent table must cover j >= 1")
    js = range(1, table.max_j + 1)
    aux = AuxPolySet(
        max_j=table.max_j,
        theta_minus={j: table.c[j] - table.d[j] for j in js},
        theta_plus={j: table.c[j] + table.d[j] for j in js},
        lambda_minus={j: table.e[j] - table.f[j] for j in js},
        lambda_plus={j: table.e[j] + table.f[j] for j in js},
    )
    logger.debug(f"Auxiliary polynomials built up to j={table.max_j}")
    return aux


def kappa(j: int) -> Fraction:
    """κ_{j-1} = (-1)^{j-1} 2^{2j-3} / (2j-2)!  (j >= 2)."""
    if j < 2:
        raise ValueError(f"kappa needs j >= 2, got {j}")
    return Fraction((-1) ** (j - 1) * 2 ** (2 * j - 3), factorial(2 * j - 2))


def kappa_hat(j: int) -> Fraction:
    """κ̂_{j-1} = j(4j-7)/32."""
    return Fraction(j * (4 * j - 7), 32)


def closed_form_identities(aux: AuxPolySet, j: int) -> Dict[str, bool]:
    """The ten coefficient identities for Θ_{j-1}^±, Λ_{j-1}^±, by name."""
    if not 2 <= j <= aux.max_j + 1:
        raise ValueError(f"j={j} outside 2..{aux.max_j + 1}")
    trig = build_trig_table(j - 1)
    a, b = trig.a[j - 1], trig.b[j - 1]
    k, kh = kappa(j), kappa_hat(j)
    p = 2 ** (2 * j - 1)
    linear_a = k - Fraction(j, 2) * a
    linear_b = k - Fraction(j, 2) * b
    return {
        "alpha0=a=beta0": aux.alpha(j, 0) == a == aux.beta(j, 0),
        "gamma0=b=delta0": aux.gamma(j, 0) == b == aux.delta(j, 0),
        "alpha1=kappa-j/2*a=beta1+2kappa": aux.alpha(j, 1) == linear_a == aux.beta(j, 1) + 2 * k,
        "gamma1+2kappa=kappa-j/2*b=delta1": aux.gamma(j, 1) + 2 * k == linear_b == aux.delta(j, 1),
        "alpha2": aux.alpha(j, 2) == k / 16 * (7 - 8 * j - p) + kh * a,
        "beta2": aux.beta(j, 2) == k / 16 * (-9 + 8 * j + p) + kh * a,
        "gamma2": aux.gamma(j, 2) == k / 16 * (-7 + 8 * j - p) + kh * b,
        "delta2": aux.delta(j, 2) == k / 16 * (9 - 8 * j + p) + kh * b,
        "alphaj,betaj": aux.alpha(j, j) == 2 ** (2 * j) * a and aux.beta(j, j) == (2 - 2 ** (2 * j)) * a,
        "gammaj=deltaj=0": aux.gamma(j, j) == 0 == aux.delta(j, j),
    }


def check_closed_forms(aux: AuxPolySet, j: int) -> bool:
    results = closed_form_identities(aux, j)
    failed = [name for name, ok in results.items() if not ok]
    if failed:
        logger.warning(f"Coefficient identities failing at j={j}: {', '.join(failed)}")
    return not failed


def xi_polynomials(aux: AuxPolySet, j: int) -> Tuple[ModPoly, ModPoly, ModPoly, ModPoly]:
    """(-Θ_j^-, Θ_j^+, -Λ_j^-, Λ_j^+)."""
    return (
        -aux.poly(AuxFamily.THETA_MINUS, j),
        aux.poly(AuxFamily.THETA_PLUS, j),
        -aux.poly(AuxFamily.LAMBDA_MINUS, j),
        aux.poly(AuxFamily.LAMBDA_PLUS, j),
    )


def coefficient_rows(polys: Tuple[ModPoly, ...]) -> List[List[Fraction]]:
    """One row per power of k², one column per polynomial."""
    depth = max((p.degree for p in polys if p.degree is not None), default=-1) + 1
    return [[p.coefficient(i) for p in polys] for i in range(depth)]


def xi_kernel(aux: AuxPolySet, j: int) -> Tuple[int, ...]:
    """Primitive generator of the kernel; every k² coefficient is used."""
    basis = kernel_basis(coefficient_rows(xi_polynomials(aux, j)), n_cols=4)
    if len(basis) != 1:
        raise KernelDimensionError(
            f"xi kernel identity violated at j={j}: (2^(2j+1)-1)Theta- + 2^(2j+1)Theta+ - Lambda- = 0 "
            f"must be the only relation, got a kernel of dimension {len(basis)}"
        )
    return basis[0]


def xi_relation_residual(aux: AuxPolySet, j: int) -> ModPoly:
    """(2^{2j+1} - 1)Θ_j^- + 2^{2j+1}Θ_j^+ - Λ_j^-; the zero polynomial."""
    p = 2 ** (2 * j + 1)
    return (
        aux.poly(AuxFamily.THETA_MINUS, j) * (p - 1)
        + aux.poly(AuxFamily.THETA_PLUS, j) * p
        - aux.poly(AuxFamily.LAMBDA_MINUS, j)
    )
