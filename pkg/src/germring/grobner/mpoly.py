"""Sparse multivariate polynomials over Q(i) with named variables."""

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..exactalg.numbers import GaussianRational, format_scalar, simplify
from .orders import DEGREVLEX


@dataclass(frozen=True)
class Ring:
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    @property
    def n(self):
        return len(self.variables)

    def index(self, name):
        return self.variables.index(name)

    def gen(self, name):
        e = [0] * self.n
        e[self.index(name)] = 1
        return MPoly(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def one(self):
        return MPoly(self, {(0,) * self.n: Fraction(1)})

    def zero(self):
        return MPoly(self, {})

    def monomial(self, exps, coeff=1):
        return MPoly(self, {tuple(exps): simplify(coeff)} if coeff != 0 else {})

    def binomial(self, plus, minus, coeff=1):
        """``x^plus - coeff * x^minus``."""
        return self.monomial(plus) - self.monomial(minus, coeff)


class MPoly:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: simplify(c) for m, c in terms.items() if c != 0}

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == self.ring.one() * other if other != 0 else not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.ring.monomial((0,) * self.ring.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = simplify(out.get(m, 0) + c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return MPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = simplify(out.get(m, 0) + c1 * c2)
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return MPoly._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return {self.ring.variables[i] for i in used}

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_binomial(self):
        return len(self.terms) <= 2

    def substitute_monomials(self, images, target_ring):
        """Ring map sending variable k to ``images[k]`` (an MPoly of ``target_ring``)."""
        out = target_ring.zero()
        for m, c in self.terms.items():
            term = target_ring.one() * c
            for k, e in enumerate(m):
                if e:
                    term = term * images[k] ** e
            out = out + term
        return out

    def rename(self, target_ring, mapping=None):
        """Re-express in ``target_ring`` matching variables by name.

        Variables missing from ``target_ring`` must not occur in ``self``.
        """
        mapping = mapping or {}
        names = set(target_ring.variables)
        idx = [target_ring.index(mapping.get(v, v)) if mapping.get(v, v) in names else None for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            e = [0] * target_ring.n
            for k, x in enumerate(m):
                if x:
                    if idx[k] is None:
                        raise ValueError(f"variable {self.ring.variables[k]} is not in the target ring")
                    e[idx[k]] += x
            out[tuple(e)] = c
        return MPoly(target_ring, out)

    def __repr__(self):
        return f"MPoly({format_mpoly(self)!r})"

    def __str__(self):
        return format_mpoly(self)

    def to_json(self, order=None):
        items = sorted(self.terms.items(), key=lambda t: order.key(t[0]) if order else t[0], reverse=True)
        out = []
        for m, c in items:
            g = GaussianRational.coerce(c)
            out.append({"exponents": list(m), "coeff": {"re": str(g.re), "im": str(g.im)}})
        return out


def format_monomial(ring, m):
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_mpoly(p, order=None):
    if not p.terms:
        return "0"
    order = order or DEGREVLEX
    items = sorted(p.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
    out = []
    for m, c in items:
        neg = False
        if isinstance(c, GaussianRational) and c.im != 0:
            if c.re < 0 or (c.re == 0 and c.im < 0):
                neg, c = True, -c
            ctext = f"({format_scalar(c)})"
        else:
            if c < 0:
                neg, c = True, -c
            ctext = format_scalar(c)
        mono = format_monomial(p.ring, m)
        if not mono:
            body = ctext
        elif c == 1:
            body = mono
        else:
            body = f"{ctext}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOK = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def parse_mpoly(text, ring):
    """Parse ``x1^2*x2*x3 - 1`` style text over ``ring``; ``i`` is the imaginary unit
    unless it names a ring variable."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character in polynomial {text!r} at offset {pos}")
        num, ident, op = m.groups()
        toks.append(("NUM", int(num)) if num else ("ID", ident) if ident else (op, None))
        pos = m.end()
    toks.append(("END", None))
    i = 0

    def peek():
        return toks[i][0]

    def take(kind=None):
        nonlocal i
        t = toks[i]
        if kind and t[0] != kind:
            raise ParseError(f"expected {kind} in polynomial {text!r}")
        i += 1
        return t

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        v = term() * sign
        while peek() in ("+", "-"):
            op = take()[0]
            t = term()
            v = v + t if op == "+" else v - t
        return v

    def term():
        v = factor()
        while peek() in ("*", "/"):
            op = take()[0]
            rhs = factor()
            if op == "*":
                v = v * rhs
            else:
                if len(rhs.terms) != 1 or any(any(m) for m in rhs.terms):
                    raise ParseError("division is only allowed by constants")
                c = next(iter(rhs.terms.values()))
                inv = c.inverse() if isinstance(c, GaussianRational) else 1 / c
                v = v * inv
        return v

    def factor():
        v = atom()
        if peek() == "^":
            take()
            n = take("NUM")[1]
            v = v**n
        return v

    def atom():
        kind = peek()
        if kind == "NUM":
            return ring.one() * take()[1]
        if kind == "ID":
            name = take()[1]
            if name in ring.variables:
                return ring.gen(name)
            if name == "i":
                return ring.one() * GaussianRational(0, 1)
            raise ParseError(f"unknown variable {name!r}; ring has {', '.join(ring.variables)}")
        if kind == "(":
            take()
            v = expr()
            take(")")
            return v
        raise ParseError(f"unexpected token {kind!r} in polynomial {text!r}")

    v = expr()
    if peek() != "END":
        raise ParseError(f"trailing input in polynomial {text!r}")
    return v
