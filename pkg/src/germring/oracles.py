"""Brute-force oracles, independent of the production algorithms they check."""

from itertools import combinations, product

from .semigroup import dot


def semigroup_elements(weights, max_degree):
    """All ``a`` in N^n with ``weights . a >= 0`` and ``1 <= |a| <= max_degree``."""
    n = len(weights)
    out = []
    for a in product(range(max_degree + 1), repeat=n):
        d = sum(a)
        if 1 <= d <= max_degree and dot(weights, a) >= 0:
            out.append(a)
    return out


def irreducibles(weights, max_degree):
    """Elements of degree <= max_degree admitting no splitting into two nonzero elements."""
    elems = semigroup_elements(weights, max_degree)
    member = set(elems)
    out = set()
    for a in elems:
        split = False
        for b in product(*(range(x + 1) for x in a)):
            if not any(b) or b == a:
                continue
            c = tuple(x - y for x, y in zip(a, b))
            if b in member and c in member:
                split = True
                break
        if not split:
            out.add(a)
    return out


def census_bruteforce(ell):
    """``L_t`` by searching every support for a realizing monomial.

    If a support ``S`` is realizable at all it is realized with every
    entry at most ``max(1, (r - 1) * max|ell_j|)``: put 1 on each index of
    S except one positive index, which absorbs the negative weight.
    """
    r = len(ell)
    bound = max(1, (r - 1) * max((abs(x) for x in ell), default=0))
    L = {}
    for t in range(1, r):
        count = 0
        for supp in combinations(range(r), t):
            w = [ell[j] for j in supp]
            if any(dot(w, vals) >= 0 for vals in product(range(1, bound + 1), repeat=t)):
                count += 1
        L[t] = count
    return L


def kernel_vectors_in_box(columns, box):
    """Yield every nonzero integer ``u`` with ``sum(u_j * columns[j]) == 0`` and ``|u_j| <= box``.

    Depth-first over coordinates with an exact residual-reachability prune.
    """
    m = len(columns)
    if m == 0:
        return
    dim = len(columns[0])
    # reach[k][i] = max absolute contribution of coordinates k.. to row i
    reach = [[0] * dim for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        reach[k] = [reach[k + 1][i] + box * abs(columns[k][i]) for i in range(dim)]
    u = [0] * m
    rows = range(dim)

    def rec(k, resid):
        if k == m:
            if not any(resid) and any(u):
                yield tuple(u)
            return
        col = columns[k]
        nxt = reach[k + 1]
        for x in range(-box, box + 1):
            res = [resid[i] + x * col[i] for i in rows]
            if all(abs(res[i]) <= nxt[i] for i in rows):
                u[k] = x
                yield from rec(k + 1, res)
        u[k] = 0

    yield from rec(0, [0] * dim)
