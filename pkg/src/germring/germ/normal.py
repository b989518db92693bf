"""Germs R(z)*exp(P(z)) and their arithmetic."""

from dataclasses import dataclass, field

from ..errors import AbstractMember, DimensionMismatch
from ..exactalg.numbers import GaussianRational, parse_scalar, simplify
from ..exactalg.poly import Poly, RatFunc, format_poly


@dataclass(frozen=True)
class ExpPolyGerm:
    """A germ in normal form ``rat * exp(exp_part)``.

    Equality is componentwise; a constant term in ``exp_part`` is a
    transcendental unit that is never folded into ``rat``.
    """

    rat: RatFunc
    exp_part: Poly = field(default_factory=Poly)

    def __post_init__(self):
        if not self.rat:
            raise ZeroDivisionError("the zero germ has no normal form")

    @classmethod
    def one(cls):
        return cls(RatFunc.const(1), Poly())

    def __mul__(self, other):
        return ExpPolyGerm(self.rat * other.rat, self.exp_part + other.exp_part)

    def __truediv__(self, other):
        return ExpPolyGerm(self.rat / other.rat, self.exp_part - other.exp_part)

    def __pow__(self, n):
        return ExpPolyGerm(self.rat**n, self.exp_part.scale(n))

    def inverse(self):
        return ExpPolyGerm(self.rat.inverse(), -self.exp_part)

    def is_constant(self):
        return self.rat.is_constant() and self.exp_part.is_constant()

    def derivative_rat(self):
        """Rational factor of the derivative: ``(R e^P)' = (R' + R P') e^P``."""
        return self.rat.derivative() + self.rat * RatFunc(self.exp_part.derivative())

    def __str__(self):
        return format_germ(self)

    def to_json(self):
        return {"rat": self.rat.to_json(), "expPart": self.exp_part.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(RatFunc.from_json(obj["rat"]), Poly.from_json(obj["expPart"]))


@dataclass(frozen=True)
class AbstractGerm:
    """A germ known only through its order at the base point (e.g. ``sin z``)."""

    order: int
    label: str = ""

    def __str__(self):
        return self.label or f"<order {self.order}>"


@dataclass(frozen=True)
class GermFamily:
    members: tuple
    base_point: GaussianRational = GaussianRational(0)

    def __post_init__(self):
        if not self.members:
            raise ValueError("a germ family needs at least one member")
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "base_point", GaussianRational.coerce(self.base_point))

    def __len__(self):
        return len(self.members)

    @property
    def r(self):
        return len(self.members)

    def is_normal_form(self):
        return all(isinstance(m, ExpPolyGerm) for m in self.members)

    def require_normal_form(self):
        for j, m in enumerate(self.members):
            if not isinstance(m, ExpPolyGerm):
                raise AbstractMember(f"member {j + 1} ({m}) has no normal form")

    def to_json(self):
        members = []
        for m in self.members:
            if isinstance(m, AbstractGerm):
                members.append({"abstract": {"order": m.order, "label": m.label}})
            else:
                members.append({"expr": format_germ(m)})
        return {"basePoint": format_point(self.base_point), "members": members}


def format_point(z0):
    z0 = GaussianRational.coerce(z0)
    if z0.im == 0:
        return str(z0.re)
    return str(z0)


def parse_point(text):
    return parse_scalar(str(text))


def format_germ(g):
    """Print a germ in the expression grammar; ``parse_germ`` reads it back."""
    num, den, p = g.rat.num, g.rat.den, g.exp_part
    parts = []
    if num != 1 or (den == 1 and not p):
        parts.append(_wrap(num))
    txt = "*".join(parts)
    if den != 1:
        txt = (txt or "1") + "/" + _wrap(den)
    if p:
        e = f"exp({format_poly(p)})"
        txt = e if not txt else f"{txt}*{e}"
    return txt


def _wrap(p):
    s = format_poly(p)
    if len(p.coeffs) == 1 and not s.startswith("-"):
        return s
    if p.coeffs and all(c == 0 for c in p.coeffs[:-1]) and p.lc == 1:
        return s  # z or z^k
    return f"({s})"


def ord_at(g, z0=0):
    """Order of zero of ``g`` at ``z0``; the exponential factor is a unit and never counts."""
    return g.rat.valuation(simplify(GaussianRational.coerce(z0)))


def growth_order(g):
    return max(g.exp_part.degree, 0)


def germ_monomial(fam, a):
    """``prod(f_j ** a_j)`` in normal form; exponents may be negative."""
    if len(a) != fam.r:
        raise DimensionMismatch(f"exponent vector of length {len(a)} for {fam.r} germs")
    fam.require_normal_form()
    rat = RatFunc.const(1)
    exp_part = Poly()
    for f, k in zip(fam.members, a):
        if k:
            rat = rat * f.rat**k
            exp_part = exp_part + f.exp_part.scale(k)
    return ExpPolyGerm(rat, exp_part)


def order_vector(fam):
    out = []
    for m in fam.members:
        if isinstance(m, AbstractGerm):
            out.append(m.order)
        else:
            out.append(ord_at(m, fam.base_point))
    return tuple(out)


def is_holomorphic_monomial(fam, a):
    ell = order_vector(fam)
    if len(a) != len(ell):
        raise DimensionMismatch(f"exponent vector of length {len(a)} for {len(ell)} germs")
    return sum(x * y for x, y in zip(ell, a)) >= 0
