"""Groebner bases of quasi-homogeneous polynomial systems over GF(p).

Weighted Matrix-F5, FGLM to Lex, Hilbert-series predictors and cost
estimates, with a homogenization route for affine input.
"""

from .affine import AffineSystem, homogenize, is_affine_regular, solve_affine
from .buchberger import buchberger_reduced
from .checks import gen_generic, gen_regular, is_noether_position, is_regular
from .f5 import GroebnerBasis, matrix_f5, matrix_f5_hom
from .fglm import fglm, fglm_to_lex, quotient_basis
from .field import DEFAULT_PRIME
from .hilbert import b_series, bounds, profile, series_regular
from .monomials import WeightSystem, count_bounds, count_monomials, monomials_of_wdeg
from .polynomial import PolySystem, Polynomial, Ring, dehom_W, hom_system, hom_W, normal_form

__version__ = "0.1.0"

__all__ = [
    "AffineSystem", "DEFAULT_PRIME", "GroebnerBasis", "PolySystem", "Polynomial", "Ring",
    "WeightSystem", "b_series", "bounds", "buchberger_reduced", "count_bounds",
    "count_monomials", "dehom_W", "fglm", "fglm_to_lex", "gen_generic", "gen_regular",
    "hom_W", "hom_system", "homogenize", "is_affine_regular", "is_noether_position",
    "is_regular", "matrix_f5", "matrix_f5_hom", "monomials_of_wdeg", "normal_form",
    "profile", "quotient_basis", "series_regular", "solve_affine",
]
