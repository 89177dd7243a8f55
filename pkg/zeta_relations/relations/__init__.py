"""
Relation matrix assembly and the exact relation space V_m.
"""

from .relation_matrix import (
    sigma,
    WeightTable,
    weights,
    BlockR,
    block_R,
    AuxTerm,
    AssembledMatrix,
    assemble,
    assemble_for,
    CoordinateFrame,
    coordinate_frame,
    column_index,
    column_label,
    p_term,
    slot_of,
    QuasiPeriodCertificate,
    quasi_periodicity_certificate,
    quasi_periodicity_check,
)
from .kernel_solver import (
    kernel_basis,
    RelationVector,
    RelationBasis,
    relation_space,
    structured_rows,
    structured_kernel,
    zero_pattern_check,
    format_relation,
    membership_check,
    DEFAULT_CROSS_CHECK_MAX_M,
)

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
