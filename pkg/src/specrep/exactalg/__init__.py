"""Exact arithmetic foundation: Gaussian rationals, polynomials, matrices,
lattice normal forms, real-root counting, factorization, radicals, grammar."""

from .factor import (
    factor_over_Q,
    gaussian_roots,
    is_squarefree,
    rational_roots,
    squarefree_decompose,
)
from .gauss import (
    FIELD_Q,
    FIELD_QI,
    GaussRational,
    I,
    as_fraction,
    as_gauss,
    conj,
    format_fraction,
    format_scalar,
    is_rational_square,
    squarefree_decompose_int,
)
from .grammar import (
    format_bipoly,
    format_ratfunc,
    format_ternary,
    format_unipoly,
    parse_bipoly,
    parse_fraction,
    parse_monomials,
    parse_scalar,
    parse_ternary_monomials,
    parse_unipoly,
)
from .pmatrix import (
    PolyMatrix,
    disc_t,
    hnf_columns,
    hnf_reduce,
    resultant_t,
    scalar_det,
    scalar_kernel,
    scalar_solve,
    solve_upper,
)
from .poly import BiPoly, RatFunc, UniPoly, content_gcd, poly_gcd, poly_lcm, poly_xgcd
from .radscalar import RadPoly, RadScalar
from .roots import (
    find_negative_point,
    isolate_real_roots,
    nonneg_on_R,
    positive_on_R,
    refine_interval,
    root_bound,
    sample_points_of_components,
    squarefree_part,
    sturm_chain,
    sturm_count,
)


def charpoly(M: PolyMatrix) -> BiPoly:
    """det(tI - M) for a square polynomial matrix."""
    return M.charpoly_t()
