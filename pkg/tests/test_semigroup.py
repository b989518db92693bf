from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ell_vectors
from germring.errors import DimensionMismatch, DimensionTooSmall, NegativeEntry, NotInSemigroup, SizeGuard
from germring.exactalg import in_span
from germring.oracles import census_bruteforce, irreducibles, semigroup_elements
from germring.semigroup import (
    Case,
    SemigroupSpec,
    Variant,
    classify,
    contains,
    decompose,
    degree_bound,
    dot,
    hilbert_basis,
    laurent_generators,
    support_census,
)


def hb(ell, variant=Variant.N):
    return hilbert_basis(SemigroupSpec(ell, variant))


def test_classify_examples():
    rep = classify((1, -2, 0))
    assert (rep.case, rep.p, rep.q) == (Case.III, 1, 2)
    assert classify((0, 0)).case is Case.I and classify((0, 0)).p == 0
    rep = classify((-1, -3))
    assert (rep.case, rep.q) == (Case.II, 2)
    rep = classify((0, -1, 2))
    assert rep.sorted_ell((0, -1, 2)) == (2, -1, 0)


def test_contains_examples():
    assert contains(SemigroupSpec((1, -2, 0)), (2, 1, 0))
    assert contains(SemigroupSpec((3, -7)), (0, 0))
    assert not contains(SemigroupSpec((1, -2, 0), Variant.Z), (1, 1, -3))
    with pytest.raises(DimensionMismatch):
        contains(SemigroupSpec((1, -2, 0)), (1, 0))
    with pytest.raises(NegativeEntry):
        contains(SemigroupSpec((1, -2, 0)), (1, -1, 0))
    assert contains(SemigroupSpec((1, -2), Variant.TILDE), (0, 0, 0, 1))


def test_hilbert_basis_examples():
    assert hb((1, -2, 0)).as_set() == {(1, 0, 0), (2, 1, 0), (0, 0, 1)}
    assert hb((1, 1, -1, -1)).as_set() == {
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (1, 0, 1, 0),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
        (0, 1, 0, 1),
    }
    assert (1, 1, 1) in hb((2, 3, -5)).as_set()


def test_irreducible_witness_for_2_3_minus5():
    # oracle: no splitting of (1,1,1) stays inside H
    ell = (2, 3, -5)
    splits = [(b, tuple(1 - x for x in b)) for b in product((0, 1), repeat=3) if 0 < sum(b) < 3]
    assert all(dot(ell, b) < 0 or dot(ell, c) < 0 for b, c in splits)


def test_canonical_order_is_grlex():
    assert hb((1, -2, 0)).generators == ((1, 0, 0), (0, 0, 1), (2, 1, 0))


def test_laurent_examples():
    units, g = laurent_generators((1, -2, 0))
    assert in_span(units, (2, 1, 0)) and in_span(units, (0, 0, 1)) and len(units) == 2
    assert g == (1, 0, 0)
    units, g = laurent_generators((0, 0))
    assert g is None and len(units) == 2
    units, g = laurent_generators((1, 1, -1, -1))
    assert len(units) == 3 and dot((1, 1, -1, -1), g) == 1


def test_census_examples():
    c = support_census((1, -2, 0))
    assert c.L == {1: 2, 2: 2}
    assert census_bruteforce((1, -2, 0)) == {1: 2, 2: 2}
    assert support_census((1, 2, 3, 4)).N[2] == 5
    assert support_census((1, 2, 3, 4)).L == {1: 4, 2: 6, 3: 4}
    with pytest.raises(DimensionTooSmall):
        support_census((1,))


def test_decompose_examples():
    spec = SemigroupSpec((1, -2, 0))
    basis = hb((1, -2, 0))
    assert decompose(spec, (3, 1, 2), basis) == {(1, 0, 0): 1, (2, 1, 0): 1, (0, 0, 1): 2}
    assert decompose(spec, (0, 0, 0), basis) == {}
    assert decompose(spec, (2, 1, 0), basis) == {(2, 1, 0): 1}
    with pytest.raises(NotInSemigroup):
        decompose(spec, (0, 1, 0), basis)


def test_size_guard():
    with pytest.raises(SizeGuard):
        hilbert_basis(SemigroupSpec((5, -4, 3, -3)), cap=5)


def test_z_variant_has_no_hilbert_basis():
    with pytest.raises(ValueError):
        hilbert_basis(SemigroupSpec((1, -1), Variant.Z))


@given(ell_vectors(max_r=3, lo=-4, hi=4))
def test_basis_matches_bruteforce_irreducibles(ell):
    basis = hb(ell)
    bound = degree_bound(ell)
    assert all(sum(v) <= bound for v in basis)
    top = min(bound, 8)
    assert {v for v in basis if sum(v) <= top} == irreducibles(ell, top)


@given(ell_vectors(max_r=3, lo=-4, hi=4))
def test_basis_generates_and_is_minimal(ell):
    spec = SemigroupSpec(ell)
    basis = hb(ell)
    for a in semigroup_elements(ell, 6):
        assert decompose(spec, a, basis) is not None
    for g in basis:
        rest = [h for h in basis if h != g]
        assert decompose(spec, g, rest) is None


@given(ell_vectors(max_r=5, lo=-4, hi=4))
def test_case_formulas(ell):
    rep = classify(ell)
    r = len(ell)
    units = {tuple(int(i == j) for j in range(r)) for i in range(r)}
    basis = hb(ell).as_set()
    if rep.case is Case.I:
        assert basis == units
    elif rep.case is Case.II:
        assert basis == {u for u, x in zip(sorted(units, reverse=True), ell) if x == 0}
    else:
        assert len(basis) >= r


@given(ell_vectors(max_r=4, lo=-4, hi=4))
def test_laurent_generators_describe_hbar(ell):
    units, g = laurent_generators(ell)
    for b in units:
        assert dot(ell, b) == 0
    if g is None:
        assert not any(ell)
        return
    from math import gcd

    d = 0
    for x in ell:
        d = gcd(d, x)
    assert dot(ell, g) == d
    for a in product(range(-2, 3), repeat=len(ell)):
        s = dot(ell, a)
        if s >= 0:
            diff = [x - (s // d) * y for x, y in zip(a, g)]
            assert in_span(units, diff)


@given(ell_vectors(min_r=2, max_r=5, lo=-4, hi=4))
def test_census_closed_form_matches_bruteforce(ell):
    c = support_census(ell)
    assert c.L == census_bruteforce(ell)
    for t in c.L:
        assert 0 <= c.L[t] <= comb(len(ell), t)
        assert c.N[t] == comb(len(ell), t) - comb(len(ell) - 2, t - 1) + 1


@given(ell_vectors(max_r=2, lo=-3, hi=3))
def test_tilde_restricts_to_plain_basis(ell):
    r = len(ell)
    tilde = hb(ell, Variant.TILDE).as_set()
    first_block = {v[:r] for v in tilde if not any(v[r:])}
    assert first_block == hb(ell).as_set()


@given(ell_vectors(max_r=3, lo=-3, hi=3))
def test_tilde_basis_matches_bruteforce(ell):
    weights = tuple(ell) + tuple(-x for x in ell)
    basis = hb(ell, Variant.TILDE).as_set()
    assert {v for v in basis if sum(v) <= 4} == irreducibles(weights, 4)


def test_degree_bound_is_attained():
    # (1, -k): (k, 1) is irreducible and has degree k + 1 = bound
    for k in range(1, 6):
        assert max(sum(v) for v in hb((1, -k))) == degree_bound((1, -k))
