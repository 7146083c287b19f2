from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from amhs.errors import ModulusMismatch, NotPIntegral
from amhs.residue import (
    INFINITY,
    Residue,
    as_rational,
    fermat_quotient,
    is_p_integral,
    reduce_mod,
    valuation,
)


@pytest.mark.parametrize(
    "r, p, expected",
    [(Fraction(49, 3), 7, 2), (Fraction(3, 7), 7, -1), (Fraction(0), 7, INFINITY)],
)
def test_valuation(r, p, expected):
    assert valuation(r, p) == expected


def test_reduce_mod():
    assert reduce_mod(Fraction(-37, 60), 7).value == 3
    assert reduce_mod(0, 11, 3).value == 0
    assert reduce_mod("1/2", 5, 2).value == 13


def test_reduce_mod_rejects_non_integral():
    with pytest.raises(NotPIntegral) as e:
        reduce_mod(Fraction(1, 7), 7)
    assert e.value.p == 7
    assert not is_p_integral(Fraction(1, 7), 7)


@pytest.mark.parametrize("p, q", [(3, 1), (5, 3), (7, 9)])
def test_fermat_quotient(p, q):
    assert fermat_quotient(p) == q


def test_as_rational_rejects_bool():
    with pytest.raises(TypeError):
        as_rational(True)


def test_residue_arithmetic():
    x = Residue(3, 7)
    assert x + 5 == 1
    assert x - Fraction(1, 2) == 6
    assert x * x.inverse() == 1
    assert (x**6).value == 1
    assert -x == 4
    assert x == Fraction(-4)
    assert x != Fraction(1, 7)


def test_residue_ring_mismatch():
    with pytest.raises(ModulusMismatch):
        Residue(1, 7) + Residue(1, 7, 2)
    with pytest.raises(ModulusMismatch):
        Residue(1, 7) * Residue(1, 11)


def test_residue_project_and_str():
    x = Residue(50, 7, 2)
    assert x.project(1) == Residue(1, 7)
    assert str(x) == "1 (mod 7^2)"
    assert str(x.project(1)) == "1 (mod 7)"


@given(
    st.fractions(max_denominator=50).filter(lambda r: r.denominator % 7),
    st.fractions(max_denominator=50).filter(lambda r: r.denominator % 7),
    st.integers(1, 4),
)
def test_reduction_is_a_ring_map(a, b, k):
    assert reduce_mod(a * b, 7, k) == reduce_mod(a, 7, k) * reduce_mod(b, 7, k)
    assert reduce_mod(a + b, 7, k) == reduce_mod(a, 7, k) + reduce_mod(b, 7, k)


@given(
    st.fractions(max_denominator=200).filter(lambda r: r.denominator % 11),
    st.integers(1, 4),
    st.data(),
)
def test_projection_commutes_with_reduction(r, k, data):
    j = data.draw(st.integers(1, k))
    assert reduce_mod(r, 11, k).project(j) == reduce_mod(r, 11, j)


def test_residue_hash_matches_canonical_int():
    x = Residue(1, 7)
    assert hash(x) == hash(1)
    assert 1 in {x}
    assert {x: "one"}[1] == "one"
    assert len({Residue(50, 7, 2), Residue(1, 7, 2)}) == 1
