"""Multivariate polynomial ideals over Q(i)."""

from .buchberger import MonomialReducer, binomial_buchberger, buchberger, leading_monomial, normal_form_poly, spoly
from .ideal import IdealBasis, eliminate, groebner, ideal_equal, saturate
from .mpoly import MPoly, Ring, format_mpoly, parse_mpoly
from .orders import DEGREVLEX, LEX, MonomialOrder, block_order, weighted_degrevlex

__all__ = [
    "DEGREVLEX",
    "IdealBasis",
    "LEX",
    "MPoly",
    "MonomialReducer",
    "MonomialOrder",
    "Ring",
    "binomial_buchberger",
    "block_order",
    "buchberger",
    "eliminate",
    "format_mpoly",
    "groebner",
    "ideal_equal",
    "leading_monomial",
    "normal_form_poly",
    "parse_mpoly",
    "saturate",
    "spoly",
    "weighted_degrevlex",
]
