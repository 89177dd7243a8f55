"""
Laurent coefficient tables of the Jacobi elliptic squares and the auxiliary
polynomials built from them.
"""

from .elliptic_series import (
    LaurentCoeffTable,
    TrigCoeffTable,
    GlaisherSeries,
    sn_series,
    glaisher_series,
    build_laurent_table,
    build_trig_table,
    cdef_combination,
    check_cdef_identity,
    sn_ode_residual,
    doubling_identity_residual,
)
from .aux_polys import (
    AuxFamily,
    AuxPolySet,
    build_aux,
    kappa,
    kappa_hat,
    closed_form_identities,
    check_closed_forms,
    coefficient_rows,
    xi_polynomials,
    xi_kernel,
    xi_relation_residual,
)

__all__ = [
    "LaurentCoeffTable",
    "TrigCoeffTable",
    "GlaisherSeries",
    "sn_series",
    "glaisher_series",
    "build_laurent_table",
    "build_trig_table",
    "cdef_combination",
    "check_cdef_identity",
    "sn_ode_residual",
    "doubling_identity_residual",
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
