"""Recursive-descent parser for germ expressions.

Grammar (whitespace insignificant)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := atom ('^' sint)?
    atom     := 'z' | const | 'exp' '(' expr ')' | '(' expr ')'
    const    := rational (('+'|'-') rational? 'i')? | 'i'
    rational := int ('/' posint)?
    sint     := '-'? posint

The optional leading sign of ``expr`` is an extension so that ``exp(-z)``
and printed negative polynomials parse.
"""

import re
from fractions import Fraction

from ..errors import NonPolynomialExponent, NotNormalForm, ParseError, ZeroGerm
from ..exactalg.numbers import GaussianRational, simplify
from ..exactalg.poly import Poly, RatFunc
from .normal import ExpPolyGerm

_TOKEN = re.compile(r"\s*(?:(\d+)|(exp)|(z)|(i)|([-+*/^()]))")


def tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        num, kw_exp, kw_z, kw_i, op = m.groups()
        if num is not None:
            out.append(("NUM", int(num)))
        elif kw_exp:
            out.append(("EXP", None))
        elif kw_z:
            out.append(("Z", None))
        elif kw_i:
            out.append(("I", None))
        else:
            out.append((op, None))
        pos = m.end()
    out.append(("END", None))
    return out


class _Value:
    """Intermediate value: ``rat * exp(exp_part)`` where ``rat`` may be zero."""

    __slots__ = ("rat", "exp_part")

    def __init__(self, rat, exp_part=None):
        self.rat = rat
        self.exp_part = exp_part if exp_part is not None else Poly()

    @classmethod
    def scalar(cls, c):
        return cls(RatFunc.const(c))

    def add(self, other, sign=1):
        if not other.rat:
            return self
        rat = other.rat if sign > 0 else -other.rat
        if not self.rat:
            return _Value(rat, other.exp_part)
        if self.exp_part != other.exp_part:
            raise NotNormalForm("sum of terms with different exponential factors")
        total = self.rat + rat
        return _Value(total, self.exp_part if total else Poly())

    def mul(self, other):
        if not self.rat or not other.rat:
            return _Value(RatFunc.const(0))
        return _Value(self.rat * other.rat, self.exp_part + other.exp_part)

    def div(self, other):
        if not other.rat:
            raise ZeroGerm("division by an expression that simplifies to 0")
        if not self.rat:
            return self
        return _Value(self.rat / other.rat, self.exp_part - other.exp_part)

    def pow(self, n):
        if not self.rat:
            if n < 0:
                raise ZeroGerm("negative power of an expression that simplifies to 0")
            return _Value.scalar(1) if n == 0 else self
        return _Value(self.rat**n, self.exp_part.scale(n))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r} but found {tok[0]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.peek() != "END":
            raise ParseError(f"trailing input at token {self.i} in {self.text!r}")
        return v

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        v = self.term()
        if sign < 0:
            v = _Value.scalar(0).add(v, -1)
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            v = v.add(self.term(), 1 if op == "+" else -1)
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            v = v.mul(rhs) if op == "*" else v.div(rhs)
        return v

    def factor(self):
        v = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            n = self.take("NUM")[1]
            v = v.pow(-n if neg else n)
        return v

    def atom(self):
        kind = self.peek()
        if kind == "Z":
            self.take()
            return _Value(RatFunc(Poly.z()))
        if kind == "I":
            self.take()
            return _Value.scalar(GaussianRational(0, 1))
        if kind == "NUM":
            return _Value.scalar(self.const())
        if kind == "EXP":
            self.take()
            self.take("(")
            arg = self.expr()
            self.take(")")
            if not arg.rat:
                return _Value.scalar(1)
            if arg.exp_part or not arg.rat.is_poly():
                raise NonPolynomialExponent("argument of exp does not normalize to a polynomial")
            return _Value(RatFunc.const(1), arg.rat.num)
        if kind == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(f"unexpected token {kind!r} in {self.text!r}")

    def rational(self):
        n = Fraction(self.take("NUM")[1])
        if self.peek() == "/" and self.peek(1) == "NUM":
            self.take()
            d = self.take("NUM")[1]
            if d == 0:
                raise ZeroGerm("division by zero in a rational constant")
            n = n / d
        return n

    def const(self):
        re_part = self.rational()
        if self.peek() in ("+", "-"):
            save = self.i
            sign = 1 if self.take()[0] == "+" else -1
            im = Fraction(1)
            if self.peek() == "NUM":
                im = self.rational()
            if self.peek() == "I":
                self.take()
                return simplify(GaussianRational(re_part, sign * im))
            self.i = save
        return re_part


def parse_value(text):
    return _Parser(text).parse()


def parse_germ(text):
    """Parse and normalize a germ expression to ``rat * exp(P)``."""
    v = parse_value(text)
    if not v.rat:
        raise ZeroGerm(f"expression {text!r} simplifies to 0")
    return ExpPolyGerm(v.rat, v.exp_part)


def parse_poly(text):
    """Parse an expression that must be a polynomial in z (no exp factor)."""
    v = parse_value(text)
    if not v.rat:
        return Poly()
    if v.exp_part or not v.rat.is_poly():
        raise NotNormalForm(f"{text!r} is not a polynomial in z")
    return v.rat.num


def parse_ratfunc(text):
    v = parse_value(text)
    if not v.rat:
        return RatFunc.const(0)
    if v.exp_part:
        raise NotNormalForm(f"{text!r} is not a rational function of z")
    return v.rat
