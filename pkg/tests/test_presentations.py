from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from germring.errors import AbstractMember, ConstantPhi, NonRationalConstant, NonSquare, SizeGuard
from germring.exactalg import GaussianRational, Poly, RatFunc, in_span, zkernel
from germring.germ import AbstractGerm, GermFamily, family_from_exprs, germ_monomial, order_vector, parse_germ
from germring.grobner import IdealBasis, Ring, eliminate, ideal_equal, parse_mpoly, saturate
from germring.presentations import (
    Exactness,
    Verdict,
    algebraic_independence,
    augmented_independence,
    defining_ideal,
    independence,
    linear_independence,
    present_S,
    present_Sbar,
    present_Sbarhol,
    present_Shol,
    relation_lattice,
    transformed_independence,
    wronskian_over_C,
)
from germring.toricstructure import monomial_map

z = Poly.z()
EX362_USER = ["x1^2*x3*x4 - 1"]


def fam(*exprs):
    return family_from_exprs(list(exprs))


def ideal_of(ring, texts):
    return IdealBasis(ring, tuple(parse_mpoly(t, ring) for t in texts))


def ex362():
    return GermFamily(
        (parse_germ("z"), AbstractGerm(1, "sin(z)"), parse_germ("exp(z)/z"), parse_germ("exp(-z)/z"))
    )


# -- germ-side oracles -------------------------------------------------------------


def _germ_key(g):
    """Normal form up to a scalar, plus that scalar."""
    lc = g.rat.num.lc
    return (RatFunc(g.rat.num.scale(GaussianRational.coerce(lc).inverse()), g.rat.den), g.exp_part), lc


def vanishes_on(poly, images):
    """``poly`` evaluated at germs ``images`` is zero, grouping equal germs."""
    totals = {}
    for m, c in poly.terms.items():
        g = images[0] ** 0
        for img, e in zip(images, m):
            if e:
                g = g * img**e
        key, lc = _germ_key(g)
        totals[key] = totals.get(key, 0) + c * lc
    return all(v == 0 for v in totals.values())


def pulled_back_lattice_ideal(family, mmap):
    """Relations among ``f^(v_j)`` straight from germ arithmetic: the lattice
    ``{u : A u in L}`` with the constants of the corresponding monomials,
    saturated at the product of all variables."""
    lat = relation_lattice(family)
    m, r = mmap.m, family.r
    # rows: A u - L^T w = 0 in the unknowns (u, w)
    rows = []
    for i in range(r):
        rows.append([v[i] for v in mmap.target_exponents] + [-b[i] for b in lat.basis])
    kernel = zkernel(rows, ncols=m + len(lat.basis))
    ring = Ring(mmap.source_vars)
    gens = []
    for vec in kernel:
        u = vec[:m]
        if not any(u):
            continue
        a = mmap.image_exponent(u)
        const = germ_monomial(family, a).rat.num.lc
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        gens.append(ring.monomial(plus) - ring.monomial(minus) * const)
    if not gens:
        return IdealBasis(ring, ())
    return saturate(IdealBasis(ring, tuple(gens)), ring.monomial((1,) * m))


# -- relation lattice ---------------------------------------------------------------


def test_relation_lattice_examples(ex361_family):
    lat = relation_lattice(ex361_family)
    assert lat.basis == ((2, 1, 1),)
    assert lat.constants[0].lc == 1 and lat.constants[0].kappa == 0
    assert relation_lattice(fam("z", "exp(z)")).basis == ()
    lat = relation_lattice(fam("exp(z+1)", "exp(z)"))
    assert lat.basis == ((1, -1),)
    assert lat.constants[0].lc == 1 and lat.constants[0].kappa == 1
    with pytest.raises(AbstractMember):
        relation_lattice(ex362())


def test_constant_of_relation_is_exact():
    lat = relation_lattice(fam("3*z^2", "1/z"))
    assert lat.basis == ((1, 2),)
    assert lat.constants[0].lc == 3


_pieces = st.sampled_from(["z", "z-1", "(z+1)", "2", "i", "exp(z)", "exp(-z)", "exp(2*z)", "exp(z^2)", "exp(i*z)"])


@st.composite
def small_families(draw):
    r = draw(st.integers(1, 3))
    members = []
    for _ in range(r):
        parts = draw(st.lists(st.tuples(_pieces, st.integers(-2, 2)), min_size=1, max_size=3))
        text = "*".join(f"({p})^{k}" for p, k in parts)
        members.append(parse_germ(text))
    return GermFamily(tuple(members))


@settings(max_examples=40)
@given(small_families())
def test_relation_lattice_sound_and_complete(family):
    lat = relation_lattice(family)
    for a, c in zip(lat.basis, lat.constants):
        g = germ_monomial(family, a)
        assert g.rat.is_constant() and g.exp_part.degree <= 0
        assert g.rat.num.lc == c.lc and g.exp_part.constant_term() == c.kappa
    for a in product(range(-4, 5), repeat=family.r):
        g = germ_monomial(family, a)
        constant = g.rat.is_constant() and g.exp_part.degree <= 0
        assert constant == (in_span(lat.basis, a) if lat.basis else not any(a))


# -- presentations ------------------------------------------------------------------


def test_defining_ideal_examples(ex361_family):
    p = defining_ideal(ex361_family)
    assert ideal_equal(p.relations, ideal_of(p.ring, ["x1^2*x2*x3 - 1"]))
    assert p.exactness is Exactness.EXACT
    p = defining_ideal(fam("z"))
    assert p.relations.is_zero() and p.exactness is Exactness.EXACT
    p = defining_ideal(fam("z", "z^2"))
    assert ideal_equal(p.relations, ideal_of(p.ring, ["x1^2 - x2"]))
    assert p.exactness is Exactness.EXACT
    with pytest.raises(NonRationalConstant):
        defining_ideal(fam("exp(z+1)", "exp(z)"))
    with pytest.raises(AbstractMember):
        defining_ideal(ex362())


def test_lower_bound_when_not_certified():
    # z and z - 1 are algebraically independent, yet satisfy x1 - x2 - 1 = 0
    p = defining_ideal(fam("z", "z-1"))
    assert p.relations.is_zero() and p.exactness is Exactness.LOWER_BOUND
    assert defining_ideal(fam("exp(z)", "exp(i*z)")).exactness is Exactness.LOWER_BOUND
    assert defining_ideal(fam("z", "exp(z)", "exp(z^2)")).exactness is Exactness.EXACT


def test_user_ideal_for_abstract_family():
    p = defining_ideal(ex362(), EX362_USER)
    assert p.exactness is Exactness.LOWER_BOUND
    assert defining_ideal(ex362(), EX362_USER, assert_exact=True).exactness is Exactness.EXACT


def test_S_and_Sbar_examples(ex361_family):
    sbar = present_Sbar(ex361_family)
    expected = ["x1*y1 - 1", "x2*y2 - 1", "x3*y3 - 1", "x1^2*x2*x3 - 1"]
    assert ideal_equal(sbar.relations, ideal_of(sbar.ring, expected))
    one = fam("z")
    assert present_S(one).relations.is_zero()
    sbar = present_Sbar(one)
    assert ideal_equal(sbar.relations, ideal_of(sbar.ring, ["x1*y1 - 1"]))
    s = present_S(fam("z", "1/z"))
    assert ideal_equal(s.relations, ideal_of(s.ring, ["x1*x2 - 1"]))


def test_Shol_examples(ex361_family):
    p = present_Shol(ex361_family)
    assert p.ring.variables == ("t1", "t2", "t3")
    assert ideal_equal(p.relations, ideal_of(p.ring, ["t2*t3 - 1"]))
    p = present_Shol(fam("z"))
    assert p.ring.variables == ("t1",) and p.relations.is_zero()
    p = present_Shol(ex362(), EX362_USER)
    expected = ["t1*t23 - t2*t13", "t1*t24 - t2*t14", "t13*t24 - t14*t23", "t13*t14 - 1"]
    assert ideal_equal(p.relations, ideal_of(p.ring, expected))


@pytest.mark.parametrize(
    "exprs",
    [
        ("z", "exp(-z)/z^2", "exp(z)"),
        ("z", "z^2"),
        ("z", "1/z"),
        ("z^2", "exp(z)/z", "exp(-z)"),
        ("2*z", "1/z^2", "(z-1)"),
    ],
)
def test_Shol_paths_agree(exprs):
    family = fam(*exprs)
    p = present_Shol(family)
    direct = pulled_back_lattice_ideal(family, monomial_map(order_vector(family)))
    if p.relations.gens or direct.gens:
        assert ideal_equal(p.relations, direct)


def _laurent_model(family, generators):
    """Kernel of ``t_w -> f^(b - c)`` written in ``z, u = e^z, v = e^-z``,
    valid for members of the form ``c z^k e^(n z)``."""
    ring = Ring(("z", "u", "v") + tuple(generators))
    gens = [ring.gen("u") * ring.gen("v") - 1]
    r = family.r
    for name, w in generators.items():
        a = [x - y for x, y in zip(w[:r], w[r:])]
        g = germ_monomial(family, a)
        num, den = g.rat.num, g.rat.den
        assert den.degree <= 0 or den == Poly.z() ** den.degree
        k = num.degree - den.degree
        assert num == Poly.monomial(num.degree, num.lc)
        n = g.exp_part.coeff(1)
        assert g.exp_part == Poly.monomial(1, n) or not g.exp_part
        n = int(GaussianRational.coerce(n).re)
        image = ring.monomial((k, max(n, 0), max(-n, 0)) + (0,) * len(generators)) * num.lc
        gens.append(ring.gen(name) - image)
    return eliminate(IdealBasis(ring, tuple(gens)), {"z", "u", "v"})


def test_Sbarhol_matches_direct_laurent_model(ex361_family):
    p = present_Sbarhol(ex361_family)
    model = _laurent_model(ex361_family, p.trace["generators"])
    assert ideal_equal(p.relations, model.__class__(p.ring, tuple(g.rename(p.ring) for g in model.gens)))
    # a unit pair survives: some t_a * t_b - 1
    assert any(
        len(g.terms) == 2 and any(not any(m) for m in g.terms) and sum(map(sum, g.terms)) == 2
        for g in p.relations.gb
    )


def test_Sbarhol_small_families():
    p = present_Sbarhol(fam("z"))
    assert p.trace["generators"] == {"t1": [1, 0], "t2": [1, 1]}
    assert ideal_equal(p.relations, ideal_of(p.ring, ["t2 - 1"]))
    family = fam("z", "1/z")
    p = present_Sbarhol(family)
    images = [germ_monomial(family, [x - y for x, y in zip(w[:2], w[2:])]) for w in p.trace["generators"].values()]
    for g in p.relations.gens:
        assert vanishes_on(g, images)
    with pytest.raises(SizeGuard):
        present_Sbarhol(fam("z", "exp(-z)/z^2", "exp(z)"), gen_cap=4)


@settings(max_examples=25)
@given(small_families())
def test_substitution_check(family):
    try:
        p = present_S(family)
    except NonRationalConstant:
        return
    for g in p.relations.gens:
        assert vanishes_on(g, list(family.members))
    assert p.relations.is_proper()


# -- certificates -------------------------------------------------------------------


def test_linear_examples():
    assert linear_independence([-z, z]).verdict is Verdict.LINEAR
    cert = linear_independence([z, z + 1])
    assert cert.verdict is Verdict.FAILS and cert.witness == {"pair": [1, 2], "difference": "-1"}
    assert linear_independence([z, z**2, z**3]).verdict is Verdict.LINEAR


def test_algebraic_examples():
    assert algebraic_independence([z, z**2]).verdict is Verdict.ALGEBRAIC
    cert = algebraic_independence([-z, z])
    assert cert.verdict is Verdict.FAILS and cert.witness == {"degrees": [1, 1]}
    assert algebraic_independence([z.scale(3)]).verdict is Verdict.ALGEBRAIC
    assert independence([-z, z]).verdict is Verdict.LINEAR


def test_transformed_examples():
    g = [[RatFunc.const(1), RatFunc.const(1)], [RatFunc.const(0), RatFunc(z)]]
    cert = transformed_independence(g, [z, z**2])
    assert cert.verdict is Verdict.ALGEBRAIC and cert.trace["det"] == "z"
    ident = [[1, 0], [0, 1]]
    for polys in ([z, z**2], [-z, z], [z, z + 1]):
        plain = independence(polys)
        cert = transformed_independence(ident, polys)
        assert (cert.verdict, cert.witness) == (plain.verdict, plain.witness)
    cert = transformed_independence([[1, 1], [1, 1]], [z, z**2])
    assert cert.verdict is Verdict.FAILS and cert.witness == {"det": "0"}
    with pytest.raises(NonSquare):
        transformed_independence([[1, 0]], [z, z**2])


def test_augmented_examples():
    ident2 = [[1, 0], [0, 1]]
    cert = augmented_independence(z, [z], ident2)
    assert cert.independent and cert.trace["linearOverC"]
    # one exponent of positive degree already meets the distinct-degree test
    assert cert.verdict is Verdict.ALGEBRAIC
    ident3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert augmented_independence(z, [z, z**2], ident3).verdict is Verdict.ALGEBRAIC
    assert augmented_independence(z, [-z, z], ident3).verdict is Verdict.LINEAR
    cert = augmented_independence(z, [z, z**2], [[1, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert cert.verdict is Verdict.FAILS and cert.witness == {"det(A)": "0"}
    assert augmented_independence(z, [z, z + 2], ident3).verdict is Verdict.FAILS
    with pytest.raises(ConstantPhi):
        augmented_independence(Poly.const(2), [z], ident2)
    with pytest.raises(NonSquare):
        augmented_independence(z, [z], ident3)


def test_wronskian_examples():
    nonzero, det = wronskian_over_C(fam("exp(z)", "exp(-z)"))
    assert nonzero and det == RatFunc.const(-2)
    assert wronskian_over_C(fam("exp(z)", "2*exp(z)")) == (False, RatFunc.const(0))
    nonzero, det = wronskian_over_C(fam("z", "exp(z)"))
    assert nonzero and det == RatFunc(z - 1)


_exp_polys = st.lists(st.integers(-2, 2), min_size=1, max_size=3).map(Poly)


@given(st.lists(_exp_polys, min_size=1, max_size=3))
def test_failure_witnesses_are_real_dependences(polys):
    cert = linear_independence(polys)
    if cert.verdict is Verdict.FAILS:
        j, k = cert.witness["pair"]
        diff = polys[j - 1] - polys[k - 1]
        assert diff.is_constant()
        assert str(diff.constant_term()) == cert.witness["difference"] or diff.constant_term() == Fraction(
            cert.witness["difference"]
        )


@given(st.lists(_exp_polys, min_size=1, max_size=3))
def test_wronskian_agrees_with_pairwise_criterion(polys):
    family = GermFamily(tuple(parse_germ(f"exp({p})") if p else parse_germ("1") for p in polys))
    nonzero, _ = wronskian_over_C(family)
    assert nonzero == (linear_independence(polys).verdict is Verdict.LINEAR)


@given(st.lists(_exp_polys, min_size=1, max_size=4))
def test_verdict_strength_ordering(polys):
    alg = algebraic_independence(polys)
    if alg.verdict is Verdict.ALGEBRAIC:
        assert linear_independence(polys).verdict is Verdict.LINEAR
    assert independence(polys).independent == (
        alg.independent or linear_independence(polys).independent
    )
