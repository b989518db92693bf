"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Two engines share the pair bookkeeping: a general one over Q(i) working on
``{exponent: coeff}`` dicts, and one for pure difference binomials
``x^a - x^b`` stored as ``(a, b)`` tuples, which stay pure binomials under
S-pairs and reduction.
"""

import heapq
from operator import le

from ..cancel import check
from ..exactalg.numbers import GaussianRational, simplify
from .mpoly import MPoly
from .orders import DEGREVLEX


def _inv(c):
    return c.inverse() if isinstance(c, GaussianRational) else 1 / c


def _divides(a, b):
    return all(map(le, a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


def _disjoint(a, b):
    return not any(map(min, a, b))


def _gm_update(G, B, h, LT):
    """Gebauer-Moeller update of the active basis ``G`` and pairs ``B`` by ``h``.

    ``B`` maps ``(i, j)`` to the lcm of the two leading monomials; the new
    pairs are returned separately so the caller can queue them.
    """
    lh = LT[h]
    C = [(g, _lcm(lh, LT[g])) for g in G]
    D = []
    while C:
        g, lhg = C.pop()
        if _disjoint(lh, LT[g]) or (
            not any(_divides(l2, lhg) for _, l2 in C) and not any(_divides(l2, lhg) for _, l2 in D)
        ):
            D.append((g, lhg))
    for pair, l12 in list(B.items()):
        if (
            _divides(lh, l12)
            and _lcm(LT[pair[0]], lh) != l12
            and _lcm(LT[pair[1]], lh) != l12
        ):
            del B[pair]
    fresh = []
    for g, lhg in D:
        if not _disjoint(lh, LT[g]):
            pair = (min(g, h), max(g, h))
            B[pair] = lhg
            fresh.append(pair)
    G_new = [g for g in G if not _divides(lh, LT[g])]
    G_new.append(h)
    return G_new, fresh


class _PairQueue:
    """Normal selection strategy: smallest lcm degree first, ties by the order."""

    def __init__(self, key):
        self.key = key
        self.B = {}
        self.heap = []

    def push(self, pairs):
        for pair in pairs:
            L = self.B[pair]
            heapq.heappush(self.heap, (sum(L), self.key(L), pair))

    def pop(self):
        while self.heap:
            pair = heapq.heappop(self.heap)[2]
            if self.B.pop(pair, None) is not None:
                return pair
        return None


# -- general coefficients ---------------------------------------------------


class _Engine:
    def __init__(self, order):
        self.key = order.key
        self.P = []
        self.LT = []

    def leading(self, f):
        m = max(f, key=self.key)
        return m, f[m]

    def add(self, f):
        m, c = self.leading(f)
        inv = _inv(c)
        f = {k: simplify(v * inv) for k, v in f.items()}
        self.P.append(f)
        self.LT.append(m)
        return len(self.P) - 1

    def reduce(self, f, basis):
        f = dict(f)
        r = {}
        key = self.key
        while f:
            m = max(f, key=key)
            c = f.pop(m)
            for i in basis:
                lt = self.LT[i]
                if _divides(lt, m):
                    q = tuple(a - b for a, b in zip(m, lt))
                    for mm, cc in self.P[i].items():
                        if mm == lt:
                            continue
                        t = tuple(a + b for a, b in zip(mm, q))
                        v = f.get(t, 0) - c * cc
                        if v == 0:
                            f.pop(t, None)
                        else:
                            f[t] = v
                    break
            else:
                r[m] = c
        return r

    def spoly(self, i, j):
        L = _lcm(self.LT[i], self.LT[j])
        out = {}
        for idx, sign in ((i, 1), (j, -1)):
            q = tuple(a - b for a, b in zip(L, self.LT[idx]))
            for m, c in self.P[idx].items():
                t = tuple(a + b for a, b in zip(m, q))
                v = out.get(t, 0) + sign * c
                if v == 0:
                    out.pop(t, None)
                else:
                    out[t] = v
        return out


def buchberger(gens, order=DEGREVLEX, token=None):
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    eng = _Engine(order)
    G, Q = [], _PairQueue(order.key)
    for g in sorted(gens, key=lambda p: max(order.key(m) for m in p.terms)):
        h = eng.reduce(g.terms, G)
        if h:
            G, fresh = _gm_update(G, Q.B, eng.add(h), eng.LT)
            Q.push(fresh)
    while (pair := Q.pop()) is not None:
        check(token)
        h = eng.reduce(eng.spoly(*pair), G)
        if h:
            G, fresh = _gm_update(G, Q.B, eng.add(h), eng.LT)
            Q.push(fresh)
    return _interreduce(eng, G, ring, order)


def _interreduce(eng, G, ring, order):
    # drop redundant leading terms, then reduce tails
    G = [g for g in G if not any(h != g and _divides(eng.LT[h], eng.LT[g]) for h in G)]
    out = []
    for g in G:
        others = [h for h in G if h != g]
        tail = {m: c for m, c in eng.P[g].items() if m != eng.LT[g]}
        red = eng.reduce(tail, others) if tail else {}
        red[eng.LT[g]] = 1
        out.append(MPoly(ring, red))
    out.sort(key=lambda p: order.key(max(p.terms, key=order.key)), reverse=True)
    return out


def leading_monomial(p, order=DEGREVLEX):
    return max(p.terms, key=order.key)


def normal_form_poly(f, gb, order=DEGREVLEX):
    """Remainder of full multivariate division of ``f`` by ``gb``."""
    if not f:
        return f
    eng = _Engine(order)
    idx = [eng.add(dict(g.terms)) for g in gb if g]
    return MPoly(f.ring, eng.reduce(f.terms, idx))


def spoly(f, g, order=DEGREVLEX):
    eng = _Engine(order)
    i, j = eng.add(dict(f.terms)), eng.add(dict(g.terms))
    return MPoly(f.ring, eng.spoly(i, j))


# -- pure difference binomials ---------------------------------------------


class _BinomialEngine:
    def __init__(self, key):
        self.key = key
        self.P = []  # (lead, trail)
        self.LT = []

    def orient(self, a, b):
        if a == b:
            return None
        return (a, b) if self.key(a) > self.key(b) else (b, a)

    def nf_monomial(self, m, basis):
        changed = True
        while changed:
            changed = False
            for i in basis:
                lead, trail = self.P[i]
                if _divides(lead, m):
                    m = tuple(x - y + z for x, y, z in zip(m, lead, trail))
                    changed = True
                    break
        return m

    def reduce(self, f, basis):
        return self.orient(self.nf_monomial(f[0], basis), self.nf_monomial(f[1], basis))

    def add(self, f):
        self.P.append(f)
        self.LT.append(f[0])
        return len(self.P) - 1

    def spoly(self, i, j):
        (a, b), (c, d) = self.P[i], self.P[j]
        L = _lcm(a, c)
        return self.orient(
            tuple(x - y + z for x, y, z in zip(L, a, b)),
            tuple(x - y + z for x, y, z in zip(L, c, d)),
        )


def binomial_buchberger(binomials, key, token=None):
    """Reduced Groebner basis of pure difference binomials.

    ``binomials`` are ``(a, b)`` exponent pairs meaning ``x^a - x^b``; ``key``
    is the monomial-order sort key. Returns oriented ``(lead, trail)`` pairs.
    """
    eng = _BinomialEngine(key)
    G, Q = [], _PairQueue(key)
    start = [eng.orient(tuple(a), tuple(b)) for a, b in binomials]
    for f in sorted((f for f in start if f), key=lambda f: key(f[0])):
        h = eng.reduce(f, G)
        if h:
            G, fresh = _gm_update(G, Q.B, eng.add(h), eng.LT)
            Q.push(fresh)
    while (pair := Q.pop()) is not None:
        check(token)
        s = eng.spoly(*pair)
        if s is None:
            continue
        h = eng.reduce(s, G)
        if h:
            G, fresh = _gm_update(G, Q.B, eng.add(h), eng.LT)
            Q.push(fresh)
    G = [g for g in G if not any(h != g and _divides(eng.LT[h], eng.LT[g]) for h in G)]
    out = []
    for g in G:
        lead, trail = eng.P[g]
        out.append((lead, eng.nf_monomial(trail, [h for h in G if h != g])))
    out.sort(key=lambda f: key(f[0]), reverse=True)
    return out


class MonomialReducer:
    """Normal forms of monomials modulo a Groebner basis of pure binomials.

    ``pairs`` are ``(lead, trail)`` exponent tuples; results are memoized,
    which pays off when many monomials share reduction chains.
    """

    max_memo = 2_000_000

    def __init__(self, pairs):
        self.pairs = [(tuple(a), tuple(b)) for a, b in pairs]
        # support bitmasks give a cheap necessary condition for divisibility
        self._rules = [(_support_mask(a), a, b) for a, b in self.pairs]
        self._by_var = {}
        self._memo = {}

    def normal_form(self, m):
        return self._reduce(tuple(m), self._rules)

    def times_variable(self, m, i):
        """Normal form of ``m * t_i`` for a monomial ``m`` already in normal form."""
        m = m[:i] + (m[i] + 1,) + m[i + 1 :]
        rules = self._by_var.get(i)
        if rules is None:
            rules = self._by_var[i] = [rule for rule in self._rules if rule[1][i]]
        return self._reduce(m, rules)

    def _reduce(self, m, rules):
        memo = self._memo
        if len(memo) > self.max_memo:
            memo.clear()
        chain = []
        while m not in memo:
            mask = _support_mask(m)
            for lmask, lead, trail in rules:
                if not lmask & ~mask and all(map(le, lead, m)):
                    chain.append(m)
                    m = tuple(x - y + z for x, y, z in zip(m, lead, trail))
                    break
            else:
                memo[m] = m
            rules = self._rules
        nf = memo[m]
        for c in chain:
            memo[c] = nf
        return nf


def _support_mask(e):
    mask = 0
    for i, x in enumerate(e):
        if x:
            mask |= 1 << i
    return mask
