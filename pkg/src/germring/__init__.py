"""Exact computations for rings generated by meromorphic germs of finite order:
order vectors, one-inequality semigroups and their Hilbert bases, toric
ideals, ring presentations and independence certificates."""

from .cancel import CancelToken
from .errors import GermRingError
from .germ import (
    AbstractGerm,
    ExpPolyGerm,
    GermFamily,
    family_from_exprs,
    family_from_json,
    germ_monomial,
    ord_at,
    order_vector,
    parse_germ,
)
from .grobner import IdealBasis, MPoly, Ring, buchberger, eliminate, ideal_equal, saturate
from .presentations import (
    Exactness,
    Verdict,
    algebraic_independence,
    augmented_independence,
    defining_ideal,
    independence,
    linear_independence,
    present_S,
    present_Sbar,
    present_Sbarhol,
    present_Shol,
    relation_lattice,
    transformed_independence,
    wronskian_over_C,
)
from .semigroup import (
    Case,
    HilbertBasis,
    SemigroupSpec,
    Variant,
    classify,
    contains,
    decompose,
    hilbert_basis,
    laurent_generators,
    support_census,
)
from .toricstructure import (
    MonomialMap,
    check_thm22,
    check_thm23,
    monomial_map,
    thm24_presentation,
    toric_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractGerm",
    "CancelToken",
    "Case",
    "Exactness",
    "ExpPolyGerm",
    "GermFamily",
    "GermRingError",
    "HilbertBasis",
    "IdealBasis",
    "MPoly",
    "MonomialMap",
    "Ring",
    "SemigroupSpec",
    "Variant",
    "Verdict",
    "algebraic_independence",
    "augmented_independence",
    "buchberger",
    "check_thm22",
    "check_thm23",
    "classify",
    "contains",
    "decompose",
    "defining_ideal",
    "eliminate",
    "family_from_exprs",
    "family_from_json",
    "germ_monomial",
    "hilbert_basis",
    "ideal_equal",
    "independence",
    "laurent_generators",
    "linear_independence",
    "monomial_map",
    "ord_at",
    "order_vector",
    "parse_germ",
    "present_S",
    "present_Sbar",
    "present_Sbarhol",
    "present_Shol",
    "relation_lattice",
    "saturate",
    "support_census",
    "thm24_presentation",
    "toric_ideal",
    "transformed_independence",
    "wronskian_over_C",
]
