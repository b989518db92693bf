"""Relations among germs, presentations of the rings they generate, and
independence certificates for exponential-polynomial families."""

from dataclasses import dataclass, field
from enum import Enum

from .errors import ConstantPhi, NonRationalConstant, NonSquare, SizeGuard
from .exactalg.lattice import clear_denominators, matvec, rank, zkernel
from .exactalg.numbers import GaussianRational, format_scalar, simplify
from .exactalg.poly import Poly, RatFunc, factor_refine, ratfunc_det, scalar_det
from .germ.normal import germ_monomial, order_vector
from .grobner import IdealBasis, Ring, eliminate, parse_mpoly, saturate
from .semigroup import SemigroupSpec, Variant, hilbert_basis
from .toricstructure import monomial_map

DEFAULT_GEN_CAP = 5000


class Exactness(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND = "LowerBound"


class Verdict(str, Enum):
    LINEAR = "LinearlyIndependent"
    ALGEBRAIC = "AlgebraicallyIndependent"
    FAILS = "CriterionFails"


@dataclass(frozen=True)
class RelationConstant:
    lc: object
    kappa: object = 0

    @property
    def rational(self):
        return self.kappa == 0

    def to_json(self):
        return {"lc": format_scalar(self.lc), "kappa": format_scalar(self.kappa)}


@dataclass(frozen=True)
class RelationLattice:
    basis: tuple
    constants: tuple

    @property
    def rank(self):
        return len(self.basis)

    def to_json(self):
        return {
            "basis": [list(a) for a in self.basis],
            "constants": [c.to_json() for c in self.constants],
        }


@dataclass(frozen=True)
class Presentation:
    ring: Ring
    relations: IdealBasis
    exactness: Exactness
    trace: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        return str(self.relations)

    def to_json(self):
        return {
            "variables": list(self.ring.variables),
            "relations": [str(g) for g in self.relations.gens],
            "exactness": self.exactness.value,
            "trace": self.trace,
        }


@dataclass(frozen=True)
class IndependenceCertificate:
    verdict: Verdict
    witness: object = None
    trace: dict = field(default_factory=dict)

    @property
    def independent(self):
        return self.verdict is not Verdict.FAILS

    def to_json(self):
        return {"verdict": self.verdict.value, "witness": self.witness, "hypothesisTrace": self.trace}


# -- relation lattice --------------------------------------------------------


def _coefficient_rows(polys):
    """Integer rows (real and imaginary part per degree >= 1) with ``rows . a``
    the coefficients of ``sum(a_j * polys[j])``."""
    top = max((p.degree for p in polys), default=0)
    rows = []
    for d in range(top, 0, -1):
        for part in ("re", "im"):
            row = [getattr(GaussianRational.coerce(p.coeff(d)), part) for p in polys]
            if any(row):
                rows.append((d, clear_denominators(row)))
    return rows


def _divisor_rows(fam):
    pieces = []
    for f in fam.members:
        pieces.extend((f.rat.num, f.rat.den))
    base, exps = factor_refine(pieces)
    rows = []
    for k in range(len(base)):
        rows.append([exps[2 * j][k] - exps[2 * j + 1][k] for j in range(fam.r)])
    return base, rows


def _constant_of(fam, a):
    g = germ_monomial(fam, a)
    if not g.is_constant():  # pragma: no cover - guarded by construction
        raise AssertionError(f"lattice vector {a} does not give a constant germ")
    return RelationConstant(g.rat.num.constant_term(), g.exp_part.constant_term())


def relation_lattice(fam):
    """Integer vectors ``a`` with ``prod f_j^a_j`` constant, and those constants."""
    fam.require_normal_form()
    _, div_rows = _divisor_rows(fam)
    exp_rows = [row for _, row in _coefficient_rows([f.exp_part for f in fam.members])]
    basis = tuple(tuple(a) for a in zkernel(div_rows + exp_rows, ncols=fam.r))
    return RelationLattice(basis, tuple(_constant_of(fam, a) for a in basis))


def _exactness_trace(fam):
    """Decide whether the binomial lattice ideal captures every relation.

    Two checks, both recorded in the trace:
    * the exponent module spanned by the nonconstant parts of the P_j has
      at most one independent direction in each degree;
    * on the monomials with constant exponent part, the rational parts are
      all (up to constants) powers of a single rational function.
    """
    polys = [f.exp_part for f in fam.members]
    rows = _coefficient_rows(polys)
    degrees = sorted({d for d, _ in rows}, reverse=True)
    graded = {}
    above = 0
    for d in degrees:
        upto = rank([row for e, row in rows if e >= d])
        graded[d] = upto - above
        above = upto
    graded_ok = all(v <= 1 for v in graded.values())

    _, div_rows = _divisor_rows(fam)
    K = zkernel([row for _, row in rows], ncols=fam.r)
    images = [matvec(div_rows, k) for k in K] if div_rows else []
    div_rank = rank(images) if images else 0
    return {
        "exponentGradedRanks": {str(d): graded[d] for d in sorted(graded)},
        "exponentDegreesDistinct": graded_ok,
        "rationalPartRank": div_rank,
        "rationalPartsOneParameter": div_rank <= 1,
    }


# -- presentations -----------------------------------------------------------


def x_ring(r, with_inverses=False):
    names = [f"x{j + 1}" for j in range(r)]
    if with_inverses:
        names += [f"y{j + 1}" for j in range(r)]
    return Ring(names)


def _user_ideal(ring, ideal):
    gens = []
    for g in ideal:
        gens.append(parse_mpoly(g, ring) if isinstance(g, str) else g.rename(ring))
    return tuple(gens)


def defining_ideal(fam, ideal=None, assert_exact=False, token=None):
    """The ideal of polynomial relations among the members, in ``x1..xr``.

    For abstract families the caller supplies ``ideal`` (polynomials or
    strings); it is used as given and marked LowerBound unless
    ``assert_exact`` is set.
    """
    ring = x_ring(fam.r)
    if ideal is not None:
        gens = _user_ideal(ring, ideal)
        exact = Exactness.EXACT if assert_exact else Exactness.LOWER_BOUND
        return Presentation(ring, IdealBasis(ring, gens), exact, {"source": "user"})
    lattice = relation_lattice(fam)
    for a, c in zip(lattice.basis, lattice.constants):
        if not c.rational:
            raise NonRationalConstant(
                f"relation {list(a)} has constant {format_scalar(c.lc)}*exp({format_scalar(c.kappa)})"
            )
    binomials = []
    for a, c in zip(lattice.basis, lattice.constants):
        plus = tuple(max(x, 0) for x in a)
        minus = tuple(max(-x, 0) for x in a)
        binomials.append(ring.binomial(plus, minus, c.lc))
    if binomials:
        prod = ring.monomial((1,) * fam.r)
        relations = saturate(IdealBasis(ring, tuple(binomials)), prod, token)
    else:
        relations = IdealBasis(ring, (), ())
    trace = _exactness_trace(fam)
    trace["latticeRank"] = lattice.rank
    ok = trace["exponentDegreesDistinct"] and trace["rationalPartsOneParameter"]
    return Presentation(ring, relations, Exactness.EXACT if ok else Exactness.LOWER_BOUND, trace)


present_S = defining_ideal


def present_Sbar(fam, ideal=None, assert_exact=False, token=None):
    """Relations of the ring generated by the members and their inverses, in ``x, y``."""
    base = defining_ideal(fam, ideal, assert_exact, token)
    ring = x_ring(fam.r, with_inverses=True)
    gens = [g.rename(ring) for g in base.relations.gens]
    for j in range(fam.r):
        gens.append(ring.gen(f"x{j + 1}") * ring.gen(f"y{j + 1}") - 1)
    return Presentation(ring, IdealBasis(ring, tuple(gens)), base.exactness, dict(base.trace))


def _pull_back(base, mmap, token):
    """``{f(t) : f(x^v_1, ..., x^v_m) in base}`` by eliminating the target variables."""
    tvars = mmap.source_vars
    joint = Ring(tuple(base.ring.variables) + tuple(tvars))
    gens = [g.rename(joint) for g in base.relations.gens]
    for name, v in zip(tvars, mmap.target_exponents):
        image = joint.monomial(tuple(v) + (0,) * len(tvars))
        gens.append(joint.gen(name) - image)
    res = eliminate(IdealBasis(joint, tuple(gens)), set(base.ring.variables), token)
    return res


def present_Shol(fam, ideal=None, assert_exact=False, token=None):
    """Relations among the minimal monomial generators of the holomorphic part."""
    base = defining_ideal(fam, ideal, assert_exact, token)
    ell = order_vector(fam)
    mmap = monomial_map(ell, token=token)
    rel = _pull_back(base, mmap, token)
    trace = dict(base.trace)
    trace["generators"] = {n: list(v) for n, v in zip(mmap.source_vars, mmap.target_exponents)}
    return Presentation(rel.ring, rel, base.exactness, trace)


def present_Sbarhol(fam, ideal=None, assert_exact=False, gen_cap=DEFAULT_GEN_CAP, token=None):
    """As present_Shol, for the holomorphic part of the ring with inverses."""
    ell = order_vector(fam)
    spec = SemigroupSpec(ell, Variant.TILDE)
    hb = hilbert_basis(spec, token, cap=gen_cap)
    if len(hb) > gen_cap:
        raise SizeGuard(f"more than {gen_cap} Hilbert basis generators")
    base = present_Sbar(fam, ideal, assert_exact, token)
    mmap = monomial_map(ell, Variant.TILDE, basis=hb)
    rel = _pull_back(base, mmap, token)
    trace = dict(base.trace)
    trace["generators"] = {n: list(v) for n, v in zip(mmap.source_vars, mmap.target_exponents)}
    return Presentation(rel.ring, rel, base.exactness, trace)


# -- independence certificates -------------------------------------------------


def _as_poly(p):
    return p if isinstance(p, Poly) else Poly.const(p)


def linear_independence(polys):
    polys = [_as_poly(p) for p in polys]
    for j in range(len(polys)):
        for k in range(j + 1, len(polys)):
            diff = polys[j] - polys[k]
            if diff.is_constant():
                return IndependenceCertificate(
                    Verdict.FAILS,
                    {"pair": [j + 1, k + 1], "difference": format_scalar(simplify(diff.constant_term()))},
                    {"pairwiseNonconstant": False},
                )
    return IndependenceCertificate(Verdict.LINEAR, None, {"pairwiseNonconstant": True})


def algebraic_independence(polys):
    degrees = [_as_poly(p).degree for p in polys]
    positive = all(d >= 1 for d in degrees)
    distinct = len(set(degrees)) == len(degrees)
    trace = {"degrees": degrees, "allPositive": positive, "distinct": distinct}
    if positive and distinct:
        return IndependenceCertificate(Verdict.ALGEBRAIC, None, trace)
    return IndependenceCertificate(Verdict.FAILS, {"degrees": sorted(max(d, 0) for d in degrees)}, trace)


def independence(polys):
    """Strongest verdict available: algebraic, else linear, else the linear failure."""
    alg = algebraic_independence(polys)
    if alg.independent:
        return alg
    lin = linear_independence(polys)
    lin.trace.update(alg.trace)
    return lin


def _square(matrix, n, what):
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise NonSquare(f"{what} must be {n}x{n}")


def transformed_independence(g, polys):
    """Certificate for ``h_j = sum_k g[j][k] * exp(P_k)`` with rational-function ``g``."""
    polys = [_as_poly(p) for p in polys]
    _square(g, len(polys), "the coefficient matrix")
    det = ratfunc_det([[x if isinstance(x, RatFunc) else RatFunc.const(x) for x in row] for row in g])
    if not det:
        return IndependenceCertificate(Verdict.FAILS, {"det": "0"}, {"detNonzero": False})
    cert = independence(polys)
    trace = dict(cert.trace, detNonzero=True, det=str(det))
    return IndependenceCertificate(cert.verdict, cert.witness, trace)


def augmented_independence(phi, polys, A):
    """Certificate over C for ``(phi, e^P_1, ..., e^P_r) . A``."""
    phi = phi if isinstance(phi, RatFunc) else RatFunc(_as_poly(phi))
    if phi.is_constant():
        raise ConstantPhi("the extra function must be nonconstant")
    polys = [_as_poly(p) for p in polys]
    _square(A, len(polys) + 1, "the mixing matrix")
    trace = {"phiNonconstant": True}
    det = scalar_det(A)
    trace["detA"] = format_scalar(det)
    if det == 0:
        return IndependenceCertificate(Verdict.FAILS, {"det(A)": "0"}, trace)
    for j, p in enumerate(polys):
        if p.is_constant():
            trace["exponentsNonconstant"] = False
            return IndependenceCertificate(Verdict.FAILS, {"constantExponent": j + 1}, trace)
    trace["exponentsNonconstant"] = True
    lin = linear_independence(polys)
    trace["pairwiseNonconstant"] = lin.independent
    if not lin.independent:
        return IndependenceCertificate(Verdict.FAILS, lin.witness, trace)
    trace["linearOverC"] = True
    degrees = [p.degree for p in polys]
    trace["degrees"] = degrees
    trace["degreesDistinct"] = len(set(degrees)) == len(degrees)
    verdict = Verdict.ALGEBRAIC if trace["degreesDistinct"] else Verdict.LINEAR
    return IndependenceCertificate(verdict, None, trace)


def wronskian_over_C(fam):
    """``(det(M) != 0, det(M))`` where the Wronskian equals ``exp(sum P_j) * det(M)``."""
    fam.require_normal_form()
    r = fam.r
    cols = []
    for f in fam.members:
        dP = RatFunc(f.exp_part.derivative())
        col = [f.rat]
        for _ in range(r - 1):
            col.append(col[-1].derivative() + col[-1] * dP)
        cols.append(col)
    M = [[cols[j][k] for j in range(r)] for k in range(r)]
    det = ratfunc_det(M)
    return bool(det), det
