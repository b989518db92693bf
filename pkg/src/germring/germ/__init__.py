"""Germs of meromorphic functions of the form R(z)*exp(P(z)), and abstract germs."""

from ..errors import UsageError
from .normal import (
    AbstractGerm,
    ExpPolyGerm,
    GermFamily,
    format_germ,
    format_point,
    germ_monomial,
    growth_order,
    is_holomorphic_monomial,
    ord_at,
    order_vector,
    parse_point,
)
from .parser import parse_germ, parse_poly, parse_ratfunc

OrderVector = tuple  # tuple[int, ...]


def family_from_json(obj):
    """Build a family from ``{"basePoint": "0", "members": [{"expr": ...} | {"abstract": ...}]}``."""
    if not isinstance(obj, dict) or "members" not in obj:
        raise UsageError("family JSON needs a 'members' list")
    members = []
    for m in obj["members"]:
        if "expr" in m:
            members.append(parse_germ(m["expr"]))
        elif "abstract" in m:
            a = m["abstract"]
            members.append(AbstractGerm(int(a["order"]), str(a.get("label", ""))))
        else:
            raise UsageError(f"family member {m!r} has neither 'expr' nor 'abstract'")
    if not members:
        raise UsageError("family JSON has no members")
    return GermFamily(tuple(members), parse_point(obj.get("basePoint", "0")))


def family_from_exprs(exprs, base_point="0"):
    return GermFamily(tuple(parse_germ(e) for e in exprs), parse_point(base_point))


__all__ = [
    "AbstractGerm",
    "ExpPolyGerm",
    "GermFamily",
    "OrderVector",
    "family_from_exprs",
    "family_from_json",
    "format_germ",
    "format_point",
    "germ_monomial",
    "growth_order",
    "is_holomorphic_monomial",
    "ord_at",
    "order_vector",
    "parse_germ",
    "parse_point",
    "parse_poly",
    "parse_ratfunc",
]
