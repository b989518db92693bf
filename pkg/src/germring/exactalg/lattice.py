"""Integer lattice algebra: row Hermite normal form and integer kernels.

Matrices are plain lists of integer rows (``IntMatrix``).
"""

from fractions import Fraction
from math import gcd

IntMatrix = list  # list[list[int]], rectangular


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def hnf(m):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M``, ``U`` unimodular, pivots positive,
    entries above each pivot reduced into ``[0, pivot)`` and zero rows last.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [list(map(int, row)) for row in m]
    u = identity(rows)
    pr = 0
    for c in range(cols):
        if pr >= rows:
            break
        # Euclid on column c among rows pr..end
        while True:
            nz = [r for r in range(pr, rows) if h[r][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(h[r][c]))
            if piv != pr:
                h[pr], h[piv] = h[piv], h[pr]
                u[pr], u[piv] = u[piv], u[pr]
            done = True
            for r in range(pr + 1, rows):
                if h[r][c]:
                    q = h[r][c] // h[pr][c]
                    h[r] = [x - q * y for x, y in zip(h[r], h[pr])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[pr])]
                    if h[r][c]:
                        done = False
            if done:
                break
        if all(h[r][c] == 0 for r in range(pr, rows)):
            continue
        if h[pr][c] < 0:
            h[pr] = [-x for x in h[pr]]
            u[pr] = [-x for x in u[pr]]
        p = h[pr][c]
        for r in range(pr):
            q = h[r][c] // p
            if q:
                h[r] = [x - q * y for x, y in zip(h[r], h[pr])]
                u[r] = [x - q * y for x, y in zip(u[r], u[pr])]
        pr += 1
    return h, u


def rank(m):
    h, _ = hnf(m)
    return sum(1 for row in h if any(row))


def zkernel(m, ncols=None):
    """Z-basis of ``{a : M a = 0}``, returned in row Hermite normal form.

    ``ncols`` is needed only when ``M`` has no rows.
    """
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    if not m:
        return identity(n)
    # columns of M as rows, augmented with the identity
    aug = [[m[i][j] for i in range(len(m))] + [int(k == j) for k in range(n)] for j in range(n)]
    h, _ = hnf(aug)
    nrows = len(m)
    basis = [row[nrows:] for row in h if not any(row[:nrows])]
    if not basis:
        return []
    kb, _ = hnf(basis)
    return [row for row in kb if any(row)]


def in_span(basis, v):
    """Integer-span membership via HNF of the basis."""
    if not any(v):
        return True
    if not basis:
        return False
    h, _ = hnf(basis)
    h = [row for row in h if any(row)]
    rest = list(v)
    for row in h:
        c = next(i for i, x in enumerate(row) if x)
        if rest[c] % row[c]:
            return False
        q = rest[c] // row[c]
        rest = [x - q * y for x, y in zip(rest, row)]
    return not any(rest)


def same_lattice(a, b):
    ha = [r for r in hnf(a)[0] if any(r)] if a else []
    hb = [r for r in hnf(b)[0] if any(r)] if b else []
    return ha == hb


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else list(v)


def clear_denominators(row):
    """Scale a row of Fractions to a primitive integer row."""
    den = 1
    for x in row:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in row])


def ext_gcd_vector(v):
    """Return ``(d, a)`` with ``d = gcd(v) >= 0`` and ``sum(a_i v_i) == d``."""
    d, coef = 0, [0] * len(v)
    for i, x in enumerate(v):
        if x == 0:
            continue
        if d == 0:
            d = abs(x)
            coef = [0] * len(v)
            coef[i] = 1 if x > 0 else -1
            continue
        g, s, t = _egcd(d, x)
        coef = [s * c for c in coef]
        coef[i] += t
        d = g
    return d, coef


def _egcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
