"""Exact integer/rational linear algebra kernel."""

from .eigenvalues import (
    EigenvalueExact,
    NegativeDiscriminant,
    QuadraticIrrational,
    abs_compare,
    approx,
    compare,
    exact_value,
    solve_quadratic,
    value_str,
)
from .kernel import BACKEND
from .matrices import (
    IntMatrix,
    MatrixTooLarge,
    NotSquare,
    NotSymmetric,
    char_poly,
    determinant,
    distinct_root_count,
    max_matrix_size,
    min_poly,
    moment_hankel_rank,
    nullity_at,
    nullspace,
    rank,
    trace_product,
)
from .polynomials import (
    IntPoly,
    multiplicity_of_factor,
    poly_gcd,
    rational_roots,
    squarefree_part,
)

__all__ = [
    "BACKEND",
    "EigenvalueExact",
    "IntMatrix",
    "IntPoly",
    "MatrixTooLarge",
    "NegativeDiscriminant",
    "NotSquare",
    "NotSymmetric",
    "QuadraticIrrational",
    "abs_compare",
    "approx",
    "char_poly",
    "compare",
    "determinant",
    "distinct_root_count",
    "exact_value",
    "max_matrix_size",
    "min_poly",
    "moment_hankel_rank",
    "multiplicity_of_factor",
    "nullity_at",
    "nullspace",
    "poly_gcd",
    "rank",
    "rational_roots",
    "solve_quadratic",
    "squarefree_part",
    "trace_product",
    "value_str",
]
