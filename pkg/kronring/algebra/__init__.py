"""
Algebra Module

Polynomials, companion matrices and arithmetic in R[X]/(f).
"""

from kronring.algebra.companion import (
    CompanionMatrix,
    DenseMatrix,
    StructureMatrix,
    circulant_of,
    companion_matvec,
    companion_of,
    identity_matrix,
    kronecker_left,
    mat_mul,
    mat_vec,
    matrix_add,
    matrix_power,
    structure_blocks,
    structure_matrix,
    transpose,
)
from kronring.algebra.extension import (
    STRATEGIES,
    ExtElement,
    ExtensionContext,
    element_from_poly,
    from_coordinates,
    make_context,
    multiply,
    odot,
    power,
    power_coordinates,
    regular_representation,
    theorem2_check,
)
from kronring.algebra.parser import format_polynomial, parse_polynomial
from kronring.algebra.poly import (
    DensePolynomial,
    MonicModulus,
    divmod_monic,
    poly_add,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_sub,
)

__all__ = [
    "CompanionMatrix",
    "DenseMatrix",
    "StructureMatrix",
    "circulant_of",
    "companion_matvec",
    "companion_of",
    "identity_matrix",
    "kronecker_left",
    "mat_mul",
    "mat_vec",
    "matrix_add",
    "matrix_power",
    "structure_blocks",
    "structure_matrix",
    "transpose",
    "STRATEGIES",
    "ExtElement",
    "ExtensionContext",
    "element_from_poly",
    "from_coordinates",
    "make_context",
    "multiply",
    "odot",
    "power",
    "power_coordinates",
    "regular_representation",
    "theorem2_check",
    "format_polynomial",
    "parse_polynomial",
    "DensePolynomial",
    "MonicModulus",
    "divmod_monic",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_neg",
    "poly_sub",
]
