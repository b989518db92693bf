"""Affine semigroups cut out by one inequality ``ell . a >= 0``.

``H`` lives in N^r, ``Hbar`` in Z^r and ``Htilde`` in N^(2r) (pairs ``(b, c)``
with ``b - c`` in ``Hbar``, i.e. the weight vector ``(ell, -ell)``).
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    NegativeEntry,
    NotInSemigroup,
    SizeGuard,
)
from .exactalg.lattice import ext_gcd_vector, zkernel


class Variant(str, Enum):
    N = "N"
    Z = "Z"
    TILDE = "Tilde"


class Case(str, Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"


@dataclass(frozen=True)
class SemigroupSpec:
    ell: tuple
    variant: Variant = Variant.N

    def __post_init__(self):
        if not self.ell:
            raise ValueError("empty order vector")
        object.__setattr__(self, "ell", tuple(int(x) for x in self.ell))
        object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def weights(self):
        if self.variant is Variant.TILDE:
            return self.ell + tuple(-x for x in self.ell)
        return self.ell

    @property
    def dim(self):
        return len(self.weights)


@dataclass(frozen=True)
class CaseReport:
    case: Case
    p: int
    q: int
    permutation: tuple  # permutation[k] = original index placed at sorted position k

    def sorted_ell(self, ell):
        return tuple(ell[i] for i in self.permutation)


@dataclass(frozen=True)
class HilbertBasis:
    generators: tuple  # canonically ordered exponent vectors

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def as_set(self):
        return set(self.generators)


@dataclass(frozen=True)
class SupportCensus:
    L: dict
    N: dict


def classify(ell):
    ell = tuple(ell)
    pos = [i for i, x in enumerate(ell) if x > 0]
    neg = [i for i, x in enumerate(ell) if x < 0]
    zer = [i for i, x in enumerate(ell) if x == 0]
    perm = tuple(pos + neg + zer)
    p, q = len(pos), len(pos) + len(neg)
    if not neg:
        case = Case.I
    elif not pos:
        case = Case.II
    else:
        case = Case.III
    return CaseReport(case, p, q, perm)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def contains(spec, a):
    a = tuple(a)
    if len(a) != spec.dim:
        raise DimensionMismatch(f"vector of length {len(a)} for a semigroup in dimension {spec.dim}")
    if spec.variant is not Variant.Z and any(x < 0 for x in a):
        raise NegativeEntry(f"{a} has negative entries but {spec.variant.value} lives in N^{spec.dim}")
    return dot(spec.weights, a) >= 0


def grlex_key(v):
    """Graded lexicographic sort key: lower degree first, then x1 > x2 > ..."""
    return (sum(v), tuple(-x for x in v))


def degree_bound(weights):
    """Bound on the total degree of every Hilbert basis element.

    An irreducible ``a`` can be written as a sequence of unit steps whose
    running weight stays in ``[-max|neg|, max pos)``; two equal prefix sums
    would split off a nonzero element of weight 0, so the length is at most
    ``max pos + max|neg|``.
    """
    mp = max((w for w in weights if w > 0), default=0)
    mn = max((-w for w in weights if w < 0), default=0)
    return max(1, mp + mn)


def _compositions(n_vars, total):
    if n_vars == 0:
        if total == 0:
            yield ()
        return
    if n_vars == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(n_vars - 1, total - first):
            yield (first,) + rest


def hilbert_basis(spec, token=None, cap=None):
    """Minimal generating set of ``H`` (variant N) or ``Htilde`` (variant Tilde).

    With ``cap`` set, raises SizeGuard as soon as more than ``cap``
    generators have been found.
    """
    if spec.variant is Variant.Z:
        raise ValueError("Hbar is a group-like semigroup; use laurent_generators")
    return HilbertBasis(_hilbert_basis(spec.weights, token, cap))


def _hilbert_basis(w, token=None, cap=None):
    n = len(w)
    active = [i for i in range(n) if w[i] != 0]
    units = [tuple(int(i == j) for j in range(n)) for i in range(n) if w[i] == 0]
    found = [tuple(int(i == j) for j in range(n)) for i in range(n) if w[i] > 0]
    if any(x < 0 for x in w):
        bound = degree_bound(w)
        aw = [w[i] for i in active]
        for deg in range(2, bound + 1):
            if token is not None:
                token.check()
            for comp in _compositions(len(active), deg):
                s = dot(aw, comp)
                if s < 0:
                    continue
                # a - e_j would stay in H for a positive j in the support
                if any(c and aw[k] > 0 and s - aw[k] >= 0 for k, c in enumerate(comp)):
                    continue
                a = [0] * n
                for k, c in zip(active, comp):
                    a[k] = c
                a = tuple(a)
                if not _reducible(a, found, w):
                    found.append(a)
                    if cap is not None and len(found) + len(units) > cap:
                        raise SizeGuard(f"more than {cap} Hilbert basis generators")
    return tuple(sorted(found + units, key=grlex_key))


def _reducible(a, basis, w):
    for g in basis:
        if all(x <= y for x, y in zip(g, a)):
            rest = [y - x for x, y in zip(g, a)]
            if any(rest) and dot(w, rest) >= 0:
                return True
    return False


def laurent_generators(ell):
    """``(units, monoid_gen)`` with ``Hbar = span_Z(units) + N * monoid_gen``.

    ``monoid_gen`` is ``None`` when ``ell == 0`` (then ``Hbar = Z^r``).
    """
    ell = tuple(ell)
    r = len(ell)
    units = zkernel([list(ell)], ncols=r) if any(ell) else [[int(i == j) for j in range(r)] for i in range(r)]
    if not any(ell):
        return units, None
    d, coef = ext_gcd_vector(ell)
    for j, x in enumerate(ell):
        if x == d:
            return units, tuple(int(k == j) for k in range(r))
    return units, tuple(coef)


def support_census(ell):
    """Counts ``L_t`` of realizable supports of size t and thresholds ``N_t``, 1 <= t <= r-1.

    A support set is realizable exactly when it contains an index with
    ``ell_j > 0`` or consists of indices with ``ell_j == 0`` only.
    """
    ell = tuple(ell)
    r = len(ell)
    if r < 2:
        raise DimensionTooSmall("the support census needs r >= 2")
    n_neg = sum(1 for x in ell if x < 0)
    n_zero = sum(1 for x in ell if x == 0)
    L, N = {}, {}
    for t in range(1, r):
        L[t] = comb(r, t) - (comb(n_neg + n_zero, t) - comb(n_zero, t))
        N[t] = comb(r, t) - comb(r - 2, t - 1) + 1
    return SupportCensus(L, N)


def decompose(spec, a, basis):
    """Write ``a`` as a nonnegative combination of ``basis``.

    Returns ``{generator: multiplicity}``, or ``None`` if ``a`` is not
    representable (which signals a defective basis).
    """
    a = tuple(a)
    if not contains(spec, a):
        raise NotInSemigroup(f"{a} is not in the semigroup")
    w = spec.weights
    gens = sorted(basis, key=grlex_key, reverse=True)

    @lru_cache(maxsize=None)
    def solve(v):
        if not any(v):
            return ()
        for g in gens:
            if all(x <= y for x, y in zip(g, v)):
                rest = tuple(y - x for x, y in zip(g, v))
                if dot(w, rest) >= 0:
                    sub = solve(rest)
                    if sub is not None:
                        return sub + (g,)
        return None

    found = solve(a)
    if found is None:
        return None
    out = {}
    for g in found:
        out[g] = out.get(g, 0) + 1
    return out
