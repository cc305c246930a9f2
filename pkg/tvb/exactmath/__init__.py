from tvb.exactmath.rational import as_rat, as_vector, parse_rat, rat_to_str
from tvb.exactmath.matrix import (
    QMatrix,
    hstack,
    matrix_rank,
    nullspace,
    rank,
    rref,
    solve_linear,
    vstack,
)
from tvb.exactmath.cone import ConeHRep, cone_facets, primitive
from tvb.exactmath.polynomial import (
    SparsePoly,
    poly_arith,
    poly_determinant,
    poly_sum,
)
from tvb.exactmath.simplex import (
    LPResult,
    LPStatus,
    in_convex_hull,
    is_feasible,
    linear_program,
    lp_is_extreme,
)


__all__ = [
    "as_rat",
    "as_vector",
    "parse_rat",
    "rat_to_str",
    "QMatrix",
    "hstack",
    "vstack",
    "rref",
    "rank",
    "matrix_rank",
    "nullspace",
    "solve_linear",
    "SparsePoly",
    "poly_arith",
    "poly_sum",
    "poly_determinant",
    "LPResult",
    "LPStatus",
    "linear_program",
    "is_feasible",
    "in_convex_hull",
    "lp_is_extreme",
    "ConeHRep",
    "cone_facets",
    "primitive",
]
