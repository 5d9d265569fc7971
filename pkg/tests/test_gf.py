from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from conftest import SMALL_Q, oracle_add, oracle_mul
from dlcodes.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    InvalidFrobeniusBase,
    NonPrimeCharacteristic,
    ReducibleModulus,
)
from dlcodes.gf import (
    fe_arith,
    field_create,
    frobenius,
    gf,
    is_irreducible,
    lowest_irreducible,
    parse_field,
)


def test_gf4_alpha_squared():
    F = field_create(2, 2, "111")
    a = F.alpha
    assert a * a == a + F.one
    assert a.inverse() == a + F.one
    assert frobenius(a, 2) == a + F.one


def test_reducible_and_bad_characteristic():
    with pytest.raises(ReducibleModulus):
        field_create(2, 2, "101")
    with pytest.raises(NonPrimeCharacteristic):
        field_create(4, 1, "01")
    with pytest.raises(DegreeMismatch):
        field_create(2, 3, "111")


def test_canonical_moduli():
    assert [gf(q).descriptor for q in (2, 3, 4, 8, 9, 16)] == [
        "2^1/01",
        "3^1/01",
        "2^2/111",
        "2^3/1101",
        "3^2/101",
        "2^4/11001",
    ]


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_irreducibility_against_sympy(p, m):
    from itertools import product

    for tail in product(range(p), repeat=m):
        coeffs = tuple(tail) + (1,)
        expected = gf_irreducible_p([ZZ(c) for c in reversed(coeffs)], p, ZZ)
        assert is_irreducible(coeffs, p) == expected, coeffs
    low = lowest_irreducible(p, m)
    assert gf_irreducible_p([ZZ(c) for c in reversed(low)], p, ZZ)


def test_field_axioms_exhaustive(small_field):
    F = small_field
    q = F.q
    A, M = F.add_table.astype(np.int64), F.mul_table.astype(np.int64)
    idx = np.arange(q)
    assert (A == A.T).all() and (M == M.T).all()
    assert (A[0] == idx).all() and (M[1] == idx).all() and (M[0] == 0).all()
    # associativity and distributivity over all triples
    assert (A[A[:, :, None], idx[None, None, :]] == A[idx[:, None, None], A[None, :, :]]).all()
    assert (M[M[:, :, None], idx[None, None, :]] == M[idx[:, None, None], M[None, :, :]]).all()
    left = M[idx[:, None, None], A[None, :, :]]
    right = A[M[:, :, None], M[:, None, :]]
    assert (left == right).all()
    assert (A[idx, F.neg_table] == 0).all()
    inv = F.inv_table.astype(np.int64)
    assert (M[idx[1:], inv[1:]] == 1).all()


def test_tables_match_sympy_oracle(small_field):
    F = small_field
    for a in range(F.q):
        for b in range(F.q):
            assert int(F.mul_table[a, b]) == oracle_mul(F, a, b)
            assert int(F.add_table[a, b]) == oracle_add(F, a, b)


@pytest.mark.parametrize("q", [2**8, 3**5, 5**3, 2**12])
def test_larger_fields_group_order(q):
    F = gf(q)
    rng = np.random.default_rng(q)
    for a in rng.integers(1, q, size=50):
        a = int(a)
        assert F.pow(a, q - 1) == 1
        b = int(rng.integers(1, q))
        assert F.mul(a, b) == oracle_mul(F, a, b)
        assert F.mul(a, F.inv(a)) == 1


def test_too_large_tables():
    with pytest.raises(FieldTooLarge):
        gf(2**13).mul_table


def test_division_by_zero_and_mismatch():
    F = gf(4)
    with pytest.raises(DivisionByZero):
        F.one / F.zero
    with pytest.raises(FieldMismatch):
        fe_arith("add", gf(4).one, gf(2).one)


def test_frobenius_base_validation():
    F = gf(9)
    with pytest.raises(InvalidFrobeniusBase):
        frobenius(F.alpha, 2)
    with pytest.raises(InvalidFrobeniusBase):
        frobenius(F.alpha, 27)
    # x -> x^q is the identity on GF(q)
    assert all(frobenius(x, 9) == x for x in F.elements())


def test_parse_field_and_codec():
    F = parse_field("2^2/111")
    assert F == gf(4)
    assert parse_field("3^2") == gf(9)
    assert F.encode(2) == "01"
    assert F.decode("01") == 2
    assert str(F((1, 1))) == "11"
    with pytest.raises(ValueError):
        F.decode("2")


@st.composite
def field_and_pair(draw):
    q = draw(st.sampled_from(SMALL_Q + (25, 27, 32, 49, 64, 81)))
    F = gf(q)
    x = draw(st.integers(0, q - 1))
    y = draw(st.integers(0, q - 1))
    return F, F(x), F(y)


@given(field_and_pair(), st.data())
@settings(max_examples=300, deadline=None)
def test_frobenius_is_ring_homomorphism(fxy, data):
    F, x, y = fxy
    q0 = F.p ** data.draw(st.integers(1, F.m))
    assert frobenius(x + y, q0) == frobenius(x, q0) + frobenius(y, q0)
    assert frobenius(x * y, q0) == frobenius(x, q0) * frobenius(y, q0)
    assert frobenius(F.one, q0) == F.one


@given(field_and_pair())
@settings(max_examples=300, deadline=None)
def test_scalar_and_vector_ops_agree(fxy):
    F, x, y = fxy
    assert (x * y).value == int(F.vmul(np.array([x.value]), np.array([y.value]))[0])
    assert (x - y).value == int(F.vsub(np.array([x.value]), np.array([y.value]))[0])
    assert (x - y) + y == x
    if y:
        assert (x / y) * y == x
    e = x.value % 7
    assert x**e == F(int(F.vpow(np.array([x.value]), e)[0]))
