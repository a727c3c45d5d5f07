"""Exact certificates of real-rootedness/hyperbolicity and spectral
representations det(tI - M) = f over Q(i)[x], with definite determinantal
pencils for hyperbolic plane curves."""

from .certify import Certificate, certify_hyperbolic, certify_real_rooted, hermite_matrix
from .curvedata import BranchPoint, CurveData, analyze_curve, check_no_real_ramification
from .errors import (
    BranchPointNotRational,
    CeilingExceeded,
    InternalCheckFailed,
    NonTermination,
    NotHyperbolic,
    NotSmooth,
    NotSquarefree,
    ParseError,
    PointNotOnCurve,
    PreconditionError,
    SpecrepError,
)
from .hvpipeline import (
    Pencil,
    TernaryForm,
    check_degree_bound,
    degree_valuation,
    dehomogenize,
    hv_representation,
    normalize_direction,
)
from .ideallat import (
    NOT_FOUND,
    IdealLattice,
    default_search_bound,
    generator_candidates,
    half_different,
    ideal_conjugate,
    ideal_from_generators,
    ideal_inverse,
    ideal_mul,
    ideal_pow,
    prime_at_point,
    principal_generator_search,
    unit_ideal,
)
from .lalgebra import LElement, QuotientAlgebra
from .represent import (
    SpectralRep,
    block_compose,
    hermitian_representation,
    mult_matrix,
    symmetric_representation_search,
    verify_representation,
)
from .traceform import (
    GramForm,
    constant_cholesky,
    constant_signature,
    diagonalize_unimodular,
    gram_matrix,
    is_positive_definite_on_R,
    is_unimodular,
    trace_element,
)

__version__ = "0.1.0"

__all__ = [
    "BranchPoint",
    "BranchPointNotRational",
    "CeilingExceeded",
    "Certificate",
    "CurveData",
    "GramForm",
    "IdealLattice",
    "InternalCheckFailed",
    "LElement",
    "NOT_FOUND",
    "NonTermination",
    "NotHyperbolic",
    "NotSmooth",
    "NotSquarefree",
    "ParseError",
    "Pencil",
    "PointNotOnCurve",
    "PreconditionError",
    "QuotientAlgebra",
    "SpecrepError",
    "SpectralRep",
    "TernaryForm",
    "analyze_curve",
    "block_compose",
    "certify_hyperbolic",
    "certify_real_rooted",
    "check_degree_bound",
    "check_no_real_ramification",
    "constant_cholesky",
    "constant_signature",
    "default_search_bound",
    "degree_valuation",
    "dehomogenize",
    "diagonalize_unimodular",
    "generator_candidates",
    "gram_matrix",
    "half_different",
    "hermite_matrix",
    "hermitian_representation",
    "hv_representation",
    "ideal_conjugate",
    "ideal_from_generators",
    "ideal_inverse",
    "ideal_mul",
    "ideal_pow",
    "is_positive_definite_on_R",
    "is_unimodular",
    "mult_matrix",
    "normalize_direction",
    "prime_at_point",
    "principal_generator_search",
    "symmetric_representation_search",
    "trace_element",
    "unit_ideal",
    "verify_representation",
]
