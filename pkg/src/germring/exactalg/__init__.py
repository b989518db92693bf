from .lattice import IntMatrix, hnf, in_span, rank, same_lattice, zkernel
from .numbers import GaussianRational, Rational, format_scalar, parse_scalar
from .poly import Poly, RatFunc, factor_refine, poly_gcd, ratfunc_det, scalar_det

__all__ = [
    "GaussianRational",
    "IntMatrix",
    "Poly",
    "RatFunc",
    "Rational",
    "factor_refine",
    "format_scalar",
    "hnf",
    "in_span",
    "parse_scalar",
    "poly_gcd",
    "rank",
    "ratfunc_det",
    "same_lattice",
    "scalar_det",
    "zkernel",
]
