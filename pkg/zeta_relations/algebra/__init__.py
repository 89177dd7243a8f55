"""
Exact algebra: rationals, polynomials in k², truncated series in z².
"""

from .rational import Rat, RatLike, as_rat, rat_to_str, parse_rat
from .modpoly import ModPoly, poly_eval, sum_of_products
from .zseries import ZSeries, series_reciprocal
from .bernoulli import bernoulli, bernoulli_via_tangent, tangent_numbers
from .linalg import integer_rows, row_reduce, rank, kernel_basis, primitive_vector, mat_vec

__all__ = [
    "Rat",
    "RatLike",
    "as_rat",
    "rat_to_str",
    "parse_rat",
    "ModPoly",
    "poly_eval",
    "sum_of_products",
    "ZSeries",
    "series_reciprocal",
    "bernoulli",
    "bernoulli_via_tangent",
    "tangent_numbers",
    "integer_rows",
    "row_reduce",
    "rank",
    "kernel_basis",
    "primitive_vector",
    "mat_vec",
]
