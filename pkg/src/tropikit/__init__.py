"""Idempotent and tropical mathematics toolkit.

Semirings whose addition is idempotent (max-plus, min-plus and friends),
linear algebra and Bellman fixpoints over them, interval extensions, the
dequantization of polynomials with its Newton-set geometry, tropical curves
and amoebas, and the idempotent function calculus (sup-integrals,
convolution, the Legendre transform, Hopf-Lax evolution).
"""

from .dequant import (
    CurvePiece,
    GenPolynomial,
    Polytope,
    TropicalCurve,
    amoeba_line_sample,
    dequantize_limit,
    eval_dequantized,
    log_h,
    newton_set,
    poly_add,
    poly_mul,
    polytope_add,
    polytope_mul,
    tropical_curve_2d,
)
from .errors import (
    AmbiguousLimit,
    CancellationAtPoint,
    DegenerateInput,
    DimensionMismatch,
    DomainError,
    FileFormatError,
    GridMismatch,
    NegativeCycle,
    NonConvergent,
    NotIdempotent,
    ShapeMismatch,
    SpecMismatch,
    TropikitError,
    UnsupportedDimension,
)
from .interval import (
    IntervalMatrix,
    IntervalValue,
    interval_adjacency,
    interval_add,
    interval_bellman,
    interval_matrix_add,
    interval_matrix_mul,
    interval_mul,
)
from .linalg import (
    Graph,
    SemiringMatrix,
    adjacency_matrix,
    kleene_star,
    matrix_add,
    matrix_mul,
    shortest_paths,
    solve_bellman_gauss_seidel,
    solve_bellman_jacobi,
)
from .semiring import (
    BOOL,
    MAXMIN,
    MAXPLUS,
    MINPLUS,
    NONNEG,
    SemiringSpec,
    add,
    check_axioms,
    deformed_add,
    deformed_spec,
    get_semiring,
    leq,
    mul,
    register_semiring,
)
from .transform import (
    SampledFunction,
    convolution,
    hopf_lax_evolve,
    idempotent_integral,
    integral_wrt_measure,
    legendre,
    pointwise_add,
    scalar_mul,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousLimit",
    "BOOL",
    "CancellationAtPoint",
    "CurvePiece",
    "DegenerateInput",
    "DimensionMismatch",
    "DomainError",
    "FileFormatError",
    "GenPolynomial",
    "Graph",
    "GridMismatch",
    "IntervalMatrix",
    "IntervalValue",
    "MAXMIN",
    "MAXPLUS",
    "MINPLUS",
    "NONNEG",
    "NegativeCycle",
    "NonConvergent",
    "NotIdempotent",
    "Polytope",
    "SampledFunction",
    "SemiringMatrix",
    "SemiringSpec",
    "ShapeMismatch",
    "SpecMismatch",
    "TropicalCurve",
    "TropikitError",
    "UnsupportedDimension",
    "add",
    "adjacency_matrix",
    "amoeba_line_sample",
    "check_axioms",
    "convolution",
    "deformed_add",
    "deformed_spec",
    "dequantize_limit",
    "eval_dequantized",
    "get_semiring",
    "hopf_lax_evolve",
    "idempotent_integral",
    "integral_wrt_measure",
    "interval_add",
    "interval_adjacency",
    "interval_bellman",
    "interval_matrix_add",
    "interval_matrix_mul",
    "interval_mul",
    "kleene_star",
    "legendre",
    "leq",
    "log_h",
    "matrix_add",
    "matrix_mul",
    "mul",
    "newton_set",
    "pointwise_add",
    "poly_add",
    "poly_mul",
    "polytope_add",
    "polytope_mul",
    "register_semiring",
    "scalar_mul",
    "shortest_paths",
    "solve_bellman_gauss_seidel",
    "solve_bellman_jacobi",
    "tropical_curve_2d",
]
