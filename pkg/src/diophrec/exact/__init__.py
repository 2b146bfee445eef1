"""Exact arithmetic kernel: integers, rationals, univariate polynomials, algebraic numbers."""
from fractions import Fraction as BigRat

from .algebraic import (
    AlgebraicNumber,
    alg_arith,
    alg_compare,
    alg_eval,
    annihilator,
    isolate_real_roots,
    refine,
    sqrt,
)
from .interval import Interval, enclose
from .polynomial import (
    UniPoly,
    charpoly,
    count_roots,
    isolate_intervals,
    poly_gcd,
    real_root_count,
    squarefree,
    sturm_sequence,
)

__all__ = [
    "AlgebraicNumber",
    "BigRat",
    "Interval",
    "UniPoly",
    "alg_arith",
    "alg_compare",
    "alg_eval",
    "annihilator",
    "charpoly",
    "count_roots",
    "enclose",
    "isolate_intervals",
    "isolate_real_roots",
    "poly_gcd",
    "real_root_count",
    "refine",
    "sqrt",
    "squarefree",
    "sturm_sequence",
]
