from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import gaussians, polys, rationals
from germring.errors import ZeroInput
from germring.exactalg import (
    GaussianRational,
    Poly,
    RatFunc,
    factor_refine,
    hnf,
    in_span,
    parse_scalar,
    poly_gcd,
    rank,
    same_lattice,
    zkernel,
)
from germring.exactalg.lattice import matmul, matvec
from germring.oracles import kernel_vectors_in_box

z = Poly.z()


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (z**2 - 1, z - 1, z - 1),
        (z, Poly.const(1), Poly.const(1)),
        (z**3 + z, z**2 + 1, z**2 + 1),
        (Poly(), Poly(), Poly()),
    ],
)
def test_gcd_examples(a, b, expected):
    assert poly_gcd(a, b) == expected


def test_factor_refine_examples():
    assert factor_refine([z, z**2]) == ([z], [[1], [2]])
    assert factor_refine([z * (z - 1), z - 1]) == ([z, z - 1], [[1, 1], [0, 1]])
    assert factor_refine([Poly.const(1)]) == ([], [[]])
    with pytest.raises(ZeroInput):
        factor_refine([z, Poly()])


def test_hnf_examples():
    H, U = hnf([[2, 4], [1, 2]])
    assert H == [[1, 2], [0, 0]]
    assert matmul(U, [[2, 4], [1, 2]]) == H
    assert hnf([[1, 0], [0, 1]])[0] == [[1, 0], [0, 1]]
    assert hnf([[0]])[0] == [[0]]


def test_zkernel_examples():
    assert zkernel([[1, -2, 0]]) == [[2, 1, 0], [0, 0, 1]]
    assert zkernel([[1, 0], [0, 1]]) == []
    assert zkernel([[1, -1]]) == [[1, 1]]


def test_gaussian_arithmetic():
    a = parse_scalar("1/2+3i")
    assert a == GaussianRational(Fraction(1, 2), 3)
    assert a * a.inverse() == 1
    assert GaussianRational(1, 2) * GaussianRational(1, -2) == 5
    assert parse_scalar("i") * parse_scalar("i") == -1


def test_ratfunc_normalization():
    r = RatFunc(Poly([2]), Poly([0, 2]))
    assert r.den == z and r.num == Poly.const(1)
    assert RatFunc(z, z**2) == RatFunc(Poly.const(1), z)
    with pytest.raises(ZeroDivisionError):
        RatFunc(z, Poly())


@given(polys(), polys(), polys(nonzero=True))
def test_gcd_of_common_multiple(a, b, c):
    g = poly_gcd(a * c, b * c)
    expected = poly_gcd(a, b) * c
    if not expected:
        assert not g
    else:
        assert g == expected.monic()


@given(st.lists(polys(max_degree=3, nonzero=True, coeffs=st.integers(-3, 3)), min_size=1, max_size=4))
def test_factor_refine_reconstructs(inputs):
    base, exps = factor_refine(inputs)
    for i, a in enumerate(base):
        assert a.lc == 1 and a.degree >= 1
        for b in base[i + 1 :]:
            assert poly_gcd(a, b) == Poly.const(1)
    for p, row in zip(inputs, exps):
        prod = Poly.const(p.lc)
        for f, e in zip(base, row):
            assert e >= 0
            prod = prod * f**e
        assert prod == p


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=2))
def test_zkernel_sound_and_complete(rows):
    basis = zkernel(rows, ncols=3)
    for a in basis:
        assert matvec(rows, a) == [0] * len(rows)
    columns = [[row[j] for row in rows] for j in range(3)]
    for v in kernel_vectors_in_box(columns, 5):
        assert in_span(basis, v)
    assert len(basis) == 3 - rank(rows)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4))
def test_hnf_is_unimodular_transform(m):
    H, U = hnf(m)
    assert matmul(U, m) == H
    assert abs(_det(U)) == 1


@given(rationals.filter(bool), rationals.filter(bool))
def test_rational_roundtrip_is_exact(a, b):
    assert (a / b) * (b / a) == 1


@given(gaussians.filter(bool))
def test_gaussian_inverse(c):
    assert c * c.inverse() == 1


def test_same_lattice():
    assert same_lattice([[2, 1, 0], [0, 0, 1]], [[2, 1, 1], [0, 0, 1]])
    assert not same_lattice([[2, 0]], [[1, 0]])


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(len(m)))
