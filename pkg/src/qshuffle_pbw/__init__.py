"""Exact computations in the q-shuffle algebra on the letters x, y."""

from .catalan import (alternating_word, catalan_element, catalan_words, catalan_y,
                      gtilde, x_catalan, x_catalan_y)
from .freealg import UNIT, Element, X, Y, bilinear_form, free_mul, j_minus, j_plus
from .pbw import (beck, beck_closed_form, damiani, damiani_closed_form, dim_J, dim_U,
                  pbw_independence_check, pbw_monomials)
from .qshuffle import (Series, commutator, series_exp, series_ln, series_ln1p,
                       series_mul, shuffle_mul, shuffle_prod)
from .report import IdentityCheck, VerificationReport
from .scalar import LaurentPoly, Scalar, q_int, q_minus_qinv, q_pow, specialize
from .textio import parse_element, render_latex, render_text
from .verify import run_check, run_suite

__all__ = [
    "Element", "LaurentPoly", "Scalar", "Series", "IdentityCheck", "VerificationReport",
    "UNIT", "X", "Y", "q_int", "q_pow", "q_minus_qinv", "specialize",
    "free_mul", "bilinear_form", "j_plus", "j_minus", "shuffle_mul", "shuffle_prod",
    "commutator", "series_mul", "series_exp", "series_ln", "series_ln1p",
    "catalan_words", "catalan_element", "x_catalan", "catalan_y", "x_catalan_y",
    "gtilde", "alternating_word", "damiani", "damiani_closed_form", "beck",
    "beck_closed_form", "dim_J", "dim_U", "pbw_monomials", "pbw_independence_check",
    "parse_element", "render_text", "render_latex", "run_check", "run_suite",
]
