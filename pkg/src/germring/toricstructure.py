"""Monomial maps onto F[H] / F[Htilde], their toric ideals, and executable
checks of the structural criteria for one-inequality semigroups."""

from dataclasses import dataclass, field
from operator import mul

from .cancel import check
from .errors import BadIndices, DimensionTooSmall, WrongCase
from .exactalg.lattice import in_span, same_lattice, zkernel
from .grobner import DEGREVLEX, IdealBasis, Ring, binomial_buchberger, saturate
from .semigroup import (
    Case,
    HilbertBasis,
    SemigroupSpec,
    Variant,
    classify,
    grlex_key,
    hilbert_basis,
    laurent_generators,
    support_census,
)


@dataclass(frozen=True)
class MonomialMap:
    """``t_j -> x^(v_j)``; ``target_exponents[j]`` is the column ``v_j``."""

    target_exponents: tuple
    source_vars: tuple
    target_vars: tuple

    @property
    def m(self):
        return len(self.target_exponents)

    def matrix(self):
        """Rows indexed by target variables, columns by generators."""
        return [[v[i] for v in self.target_exponents] for i in range(len(self.target_vars))]

    def source_ring(self):
        return Ring(self.source_vars)

    def image_exponent(self, u):
        """Exponent of ``Phi(t^u)``."""
        out = [0] * len(self.target_vars)
        for k, v in zip(u, self.target_exponents):
            if k:
                for i, x in enumerate(v):
                    out[i] += k * x
        return tuple(out)


@dataclass
class StructureReport:
    conditions: dict
    data: dict = field(default_factory=dict)

    @property
    def agree(self):
        return len(set(self.conditions.values())) <= 1

    def to_json(self):
        return {"conditions": dict(self.conditions), "agree": self.agree, "data": self.data}


def t_variable_names(generators):
    """``t{j}`` for unit vectors and ``t{j}{k}`` for ``e_j + e_k`` when every
    generator has one of these shapes; otherwise ``t1..tm`` in canonical order."""
    if not generators:
        return ()
    n = len(generators[0])
    sep = "" if n < 10 else "_"
    names = []
    for v in generators:
        support = [i + 1 for i, x in enumerate(v) if x]
        if sum(v) == 1:
            names.append(f"t{support[0]}")
        elif sum(v) == 2 and len(support) == 2:
            names.append(f"t{support[0]}{sep}{support[1]}")
        else:
            return tuple(f"t{i + 1}" for i in range(len(generators)))
    return tuple(names)


def monomial_map(ell, variant=Variant.N, basis=None, token=None):
    spec = SemigroupSpec(tuple(ell), variant)
    if basis is None:
        basis = hilbert_basis(spec, token)
    gens = tuple(basis.generators if isinstance(basis, HilbertBasis) else basis)
    r = len(spec.ell)
    if spec.variant is Variant.TILDE:
        target = tuple(f"x{i + 1}" for i in range(r)) + tuple(f"y{i + 1}" for i in range(r))
        source = tuple(f"t{i + 1}" for i in range(len(gens)))
    else:
        target = tuple(f"x{i + 1}" for i in range(r))
        source = t_variable_names(gens)
    return MonomialMap(gens, source, target)


def lattice_binomials(kernel_basis):
    out = []
    for u in kernel_basis:
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        out.append((plus, minus))
    return out


def toric_ideal(mmap, token=None, method="elimination"):
    """Toric ideal ``ker(Phi)`` as an IdealBasis carrying its reduced degrevlex GB.

    ``method`` selects one of three routes that produce the same ideal:

    * ``"elimination"`` (default): eliminate the ``x`` variables from
      ``(t_j - x^(v_j))`` with the pure-binomial engine. The ideal is
      homogeneous for ``deg x_i = 1, deg t_j = |v_j|``, so ordering first by
      that degree and then by ``x``-degree is an elimination order.
    * ``"lattice"``: binomials of a Z-basis of ``ker A`` saturated one
      ``t`` variable at a time (revlex with that variable last).
    * ``"generic"``: the same lattice binomials saturated by the product of
      all ``t`` variables through ``grobner.saturate``.
    """
    ring = mmap.source_ring()
    if mmap.m == 0:
        return IdealBasis(ring, (), (), DEGREVLEX)
    if method == "elimination":
        current = _eliminate_x(mmap, token)
    else:
        kernel = zkernel(mmap.matrix(), ncols=mmap.m)
        if not kernel:
            return IdealBasis(ring, (), (), DEGREVLEX)
        seeds = lattice_binomials(kernel)
        if method == "generic":
            gens = tuple(ring.binomial(a, b) for a, b in seeds)
            prod = ring.monomial((1,) * ring.n)
            sat = saturate(IdealBasis(ring, gens), prod, token)
            return sat.with_gb(DEGREVLEX, token)
        if method != "lattice":
            raise ValueError(f"unknown toric ideal method {method!r}")
        current = _saturate_each(mmap, seeds, token)
    final = binomial_buchberger(current, DEGREVLEX.key, token)
    polys = tuple(ring.binomial(a, b) for a, b in final)
    return IdealBasis(ring, polys, polys, DEGREVLEX)


def toric_ideal_is_zero(mmap):
    """``I = 0`` exactly when ``ker A`` is trivial: any nonzero kernel vector
    ``u`` gives the nonzero binomial ``t^u+ - t^u-``."""
    return mmap.m == 0 or not zkernel(mmap.matrix(), ncols=mmap.m)


def _grading(mmap):
    return [max(1, sum(v)) for v in mmap.target_exponents]


def _eliminate_x(mmap, token):
    r, m = len(mmap.target_vars), mmap.m
    w = [1] * r + _grading(mmap)

    def key(e):
        return (sum(map(mul, w, e)), sum(e[:r])) + tuple(-a for a in reversed(e))

    seeds = []
    for j, v in enumerate(mmap.target_exponents):
        unit = tuple(int(k == j) for k in range(m))
        seeds.append((tuple(v) + (0,) * m, (0,) * r + unit))
    gb = binomial_buchberger(seeds, key, token)
    return [(lead[r:], trail[r:]) for lead, trail in gb if not any(lead[:r])]


def _saturate_each(mmap, seeds, token):
    w = _grading(mmap)
    current = seeds
    for i in range(mmap.m):
        check(token)

        def key(e, i=i):
            rest = e[:i] + e[i + 1 :]
            return (sum(map(mul, w, e)), -e[i]) + tuple(-x for x in reversed(rest))

        divided = []
        for lead, trail in binomial_buchberger(current, key, token):
            k = min(lead[i], trail[i])
            if k:
                lead = lead[:i] + (lead[i] - k,) + lead[i + 1 :]
                trail = trail[:i] + (trail[i] - k,) + trail[i + 1 :]
            divided.append((lead, trail))
        current = divided
    return current


def _require_case(report, allowed, what):
    if report.case not in allowed:
        raise WrongCase(f"{what} needs case {'/'.join(c.value for c in allowed)}, got case {report.case.value}")


def check_thm22(ell, token=None):
    """Evaluate the five equivalent conditions for case III independently."""
    ell = tuple(ell)
    rep = classify(ell)
    _require_case(rep, (Case.III,), "the five-condition check")
    r = len(ell)
    spec = SemigroupSpec(ell)
    hb = hilbert_basis(spec, token)
    mmap = monomial_map(ell, basis=hb)
    pos = [i for i in range(r) if ell[i] > 0]
    neg = [i for i in range(r) if ell[i] < 0]
    zer = [i for i in range(r) if ell[i] == 0]

    c1 = toric_ideal_is_zero(mmap)
    c2 = len(hb) == r
    c3 = len(pos) == 1 and len(neg) >= 1 and all(ell[j] % ell[pos[0]] == 0 for j in neg)

    # explicit generators; only meaningful when the multipliers are natural numbers
    mults = None
    if len(pos) == 1 and all((-ell[j]) % ell[pos[0]] == 0 for j in neg):
        mults = {j: -ell[j] // ell[pos[0]] for j in neg}
    c4 = False
    c5 = False
    if mults is not None:
        p0 = pos[0]

        def unit(i):
            return tuple(int(k == i) for k in range(r))

        formula = {unit(p0)} | {unit(k) for k in zer}
        formula |= {tuple(mults[j] * (k == p0) + (k == j) for k in range(r)) for j in neg}
        c4 = hb.as_set() == formula

        units, g = laurent_generators(ell)
        expected_units = [list(unit(k)) for k in zer] + [
            [mults[j] * (k == p0) + (k == j) for k in range(r)] for j in neg
        ]
        diff = [x - y for x, y in zip(unit(p0), g)]
        c5 = same_lattice(units, expected_units) and in_span(units, diff)

    data = {
        "generatorCount": len(hb),
        "r": r,
        "generators": [list(v) for v in hb],
        "multipliers": None if mults is None else {str(j + 1): m for j, m in sorted(mults.items())},
        "kernelRank": len(zkernel(mmap.matrix(), ncols=mmap.m)) if mmap.m else 0,
    }
    return StructureReport({"1": c1, "2": c2, "3": c3, "4": c4, "5": c5}, data)


def check_thm23(ell, census_fn=support_census, token=None):
    """Polynomial-ring criterion outside case II: conditions (1) and (2)."""
    ell = tuple(ell)
    rep = classify(ell)
    _require_case(rep, (Case.I, Case.III), "the polynomial-ring criterion")
    r = len(ell)
    if r < 2:
        raise DimensionTooSmall("the polynomial-ring criterion needs r >= 2")
    hb = hilbert_basis(SemigroupSpec(ell), token)
    units = {tuple(int(k == i) for k in range(r)) for i in range(r)}
    c1 = hb.as_set() == units
    zero = toric_ideal_is_zero(monomial_map(ell, basis=hb))
    L = census_fn(ell)
    L = L.L if hasattr(L, "L") else L
    N = support_census(ell).N
    witnesses = [t for t in range(1, r) if L[t] >= N[t]]
    c2 = zero and bool(witnesses)
    data = {
        "L": {str(t): L[t] for t in sorted(L)},
        "N": {str(t): N[t] for t in sorted(N)},
        "witnessT": witnesses,
        "toricIdealZero": zero,
    }
    return StructureReport({"1": c1, "2": c2}, data)


@dataclass(frozen=True)
class Thm24Presentation:
    generators: HilbertBasis
    laurent: dict
    relations: IdealBasis


def thm24_presentation(p, q, r):
    """Closed-form generators and relations for ``ell = (1^p, (-1)^(q-p), 0^(r-q))``."""
    if not (1 <= p < q <= r):
        raise BadIndices(f"need 1 <= p < q <= r, got p={p}, q={q}, r={r}")

    def unit(*idx):
        return tuple(int(k + 1 in idx) for k in range(r))

    P = range(1, p + 1)
    Q = range(p + 1, q + 1)
    Z = range(q + 1, r + 1)
    gens = [unit(j) for j in P] + [unit(k) for k in Z] + [unit(j, k) for j in P for k in Q]
    gens = tuple(sorted(gens, key=grlex_key))
    names = t_variable_names(gens)
    name_of = dict(zip(gens, names))
    ring = Ring(names)

    def t(*idx):
        return ring.gen(name_of[unit(*idx)])

    rels = []
    for j in P:
        for i in P:
            for k in Q:
                rels.append(t(j) * t(i, k) - t(i) * t(j, k))
                for m in Q:
                    rels.append(t(j, k) * t(i, m) - t(j, m) * t(i, k))
    uniq = []
    for f in rels:
        if f and f not in uniq and -f not in uniq:
            lead = max(f.terms, key=DEGREVLEX.key)
            uniq.append(f if f.terms[lead] > 0 else -f)
    laurent = {
        "monoid": [f"x{j}" for j in P],
        "units": [f"x{k}" for k in Z] + [f"x{j}*x{k}" for j in P for k in Q],
    }
    return Thm24Presentation(HilbertBasis(gens), laurent, IdealBasis(ring, tuple(uniq)))
