"""Dense univariate polynomials and rational functions in z over Q(i)."""

from fractions import Fraction

from ..errors import ZeroInput
from .numbers import GaussianRational, format_scalar, simplify


def _trim(coeffs):
    coeffs = [simplify(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial ``sum(c[k] * z**k)``; coefficients are Fractions or GaussianRationals.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def z(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def constant_term(self):
        return self.coeff(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return Poly([a * c for a in self.coeffs])

    def divmod(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        inv_lc = 1 / other.lc if not isinstance(other.lc, GaussianRational) else other.lc.inverse()
        if len(rem) < dlen:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dlen + 1)
        for k in range(len(rem) - dlen, -1, -1):
            c = rem[k + dlen - 1] * inv_lc
            c = simplify(c)
            quot[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly(quot), Poly(rem[: dlen - 1])

    def __floordiv__(self, other):
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_poly(other))[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lc
        inv = lc.inverse() if isinstance(lc, GaussianRational) else 1 / lc
        return self.scale(inv)

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return simplify(acc)

    def shift(self, z0):
        """Return p(z + z0)."""
        out = Poly()
        zp = Poly([z0, 1])
        for c in reversed(self.coeffs):
            out = out * zp + c
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self):
        return [_scalar_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj):
        return cls([_scalar_from_json(c) for c in obj])


def _scalar_json(c):
    c = GaussianRational.coerce(simplify(c))
    return {"re": str(c.re), "im": str(c.im)}


def _scalar_from_json(obj):
    return simplify(GaussianRational(Fraction(obj["re"]), Fraction(obj["im"])))


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return Poly.const(x)
    return None


def _positive_form(c):
    """Return (sign, c') with c = sign * c' and c' having a positive leading part."""
    if isinstance(c, GaussianRational) and c.im != 0:
        if c.re < 0 or (c.re == 0 and c.im < 0):
            return -1, -c
        return 1, c
    return (-1, -c) if c < 0 else (1, c)


def format_poly(p, var="z"):
    """Human form, highest degree first, e.g. ``z^2 - (1+2i)*z + 3/4``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign, c = _positive_form(c)
        if k == 0:
            body = _coeff_text(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if c == 1 else f"{_coeff_text(c)}*{mono}"
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts)


def _coeff_text(c):
    txt = format_scalar(c)
    if isinstance(c, GaussianRational) and c.im != 0:
        return f"({txt})"
    return txt


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) == 0``."""
    while b:
        a, b = b, a % b
    return a.monic()


def factor_refine(polys):
    """Coprime base of a list of nonzero polynomials.

    Returns ``(base, exps)`` where ``base`` is a list of pairwise coprime
    nonconstant monic polynomials and ``polys[j] == lc_j * prod(base[k]**exps[j][k])``.
    """
    for p in polys:
        if not p:
            raise ZeroInput("factor_refine received the zero polynomial")
    base = []
    for p in polys:
        if not p.is_constant():
            m = p.monic()
            if m not in base:
                base.append(m)
    changed = True
    while changed:
        changed = False
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                g = poly_gcd(base[i], base[j])
                if g.is_constant():
                    continue
                a, b = base[i], base[j]
                pieces = [g, a.exact_div(g).monic(), b.exact_div(g).monic()]
                rest = [q for k, q in enumerate(base) if k not in (i, j)]
                for q in pieces:
                    if not q.is_constant() and q not in rest:
                        rest.append(q)
                base = rest
                changed = True
                break
            if changed:
                break
    base.sort(key=lambda q: (q.degree, format_poly(q)))
    exps = []
    for p in polys:
        row = []
        rest = p
        for q in base:
            e = 0
            while True:
                quo, rem = rest.divmod(q)
                if rem:
                    break
                rest = quo
                e += 1
            row.append(e)
        assert rest.is_constant(), "coprime base does not cover an input"
        exps.append(row)
    return base, exps


class RatFunc:
    """Reduced quotient ``num/den`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Poly.const(1)
            else:
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.lc
                inv = lc.inverse() if isinstance(lc, GaussianRational) else 1 / lc
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        return cls(Poly.const(c))

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def is_poly(self):
        return self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction, GaussianRational)):
            return self == RatFunc(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratfunc(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    def derivative(self):
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def valuation(self, z0):
        """Order of vanishing at ``z0`` (negative for poles) by repeated exact division."""
        if not self.num:
            raise ZeroDivisionError("valuation of zero")
        lin = Poly([-z0, 1])
        return _multiplicity(self.num, lin) - _multiplicity(self.den, lin)

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.den == 1:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(Poly.from_json(obj["num"]), Poly.from_json(obj["den"]))


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    p = _as_poly(x)
    return None if p is None else RatFunc(p, _reduced=True)


def _multiplicity(p, lin):
    m = 0
    while p:
        q, r = p.divmod(lin)
        if r:
            break
        p = q
        m += 1
    return m


def ratfunc_det(matrix):
    """Determinant of a square matrix over Q(i)(z) by fraction-field elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    a = [[_as_ratfunc(x) for x in row] for row in matrix]
    det = RatFunc.const(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return RatFunc.const(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [a[r][k] - f * a[col][k] for k in range(n)]
    return det


def scalar_det(matrix):
    """Determinant of a square matrix of exact scalars (Fraction / GaussianRational)."""
    return ratfunc_det(matrix).num.constant_term()
