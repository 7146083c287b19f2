from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from amhs.composition import compositions_of_weight
from amhs.errors import IndexNotInvertible
from amhs.evaluator import (
    ResidueMode,
    SumFamily,
    eval_naive,
    eval_sum,
    h31,
    half,
    inverse_powers,
    poly_coefficients,
    poly_value,
    poly_value_direct,
)
from amhs.residue import reduce_mod

from .strategies import words


@pytest.mark.parametrize(
    "family, c, n, expected",
    [
        ("H", (1, -3), 6, Fraction(4769, 51840)),
        ("U", (-1,), 3, Fraction(20, 3)),
        ("V", (-1,), 2, Fraction(5, 8)),
        ("H", (1, -2), 3, Fraction(1, 12)),
        ("H", (-2,), 4, Fraction(-121, 144)),
        ("S", (1, 1), 2, Fraction(7, 4)),
        ("H", (1, 1), 0, 0),
        ("H", (1, 2, 3), 2, 0),
        ("S", (1, 1), 1, 1),
    ],
)
def test_eval_sum_values(family, c, n, expected):
    assert eval_sum(family, c, n) == expected


def test_residue_mode_value():
    value = eval_sum(SumFamily.H, (1, -3), 6, ResidueMode(7))
    assert value.value == 6
    assert str(value) == "6 (mod 7)"


def test_residue_mode_needs_units():
    with pytest.raises(IndexNotInvertible):
        eval_sum(SumFamily.H, (1,), 7, ResidueMode(7))


def test_negative_upper_limit():
    with pytest.raises(ValueError):
        eval_sum(SumFamily.H, (1,), -1)


def test_residue_mode_identity():
    assert ResidueMode(7, 2) == ResidueMode(7, 2)
    assert ResidueMode(7, 2) != ResidueMode(7, 1)
    assert ResidueMode(7, 2).modulus == 49
    assert len({ResidueMode(7), ResidueMode(7)}) == 1


def test_inverse_powers():
    assert inverse_powers(2, 3, 7) == (0, 1, 2, 4)


@pytest.mark.parametrize("family", list(SumFamily))
@pytest.mark.parametrize("w", range(1, 4))
def test_dp_matches_naive_small(family, w):
    for c in compositions_of_weight(w):
        for n in range(0, 9):
            assert eval_sum(family, c, n) == eval_naive(family, c, n), (family, c, n)


@pytest.mark.slow
@pytest.mark.parametrize("family", list(SumFamily))
def test_dp_matches_naive_exhaustive(family):
    for w in range(1, 5):
        for c in compositions_of_weight(w):
            for n in range(0, 31):
                assert eval_sum(family, c, n) == eval_naive(family, c, n), (family, c, n)


@settings(max_examples=80, deadline=None)
@given(
    st.sampled_from(list(SumFamily)),
    words(max_depth=3, max_part=4),
    st.sampled_from((7, 11, 13)),
    st.integers(1, 3),
)
def test_residue_mode_reduces_exact_value(family, c, p, k):
    n = p - 1
    exact = eval_sum(family, c, n)
    assert eval_sum(family, c, n, ResidueMode(p, k)) == reduce_mod(exact, p, k)


def test_h31_is_half_range_sum():
    for p in (7, 11, 13):
        assert h31(p) == eval_sum(SumFamily.H, (3, 1), half(p), ResidueMode(p, 2))


@pytest.mark.parametrize("alternating", [False, True])
@pytest.mark.parametrize("weak", [False, True])
@pytest.mark.parametrize("a, d, k", [(1, 1, 1), (1, 2, 1), (2, 2, 2), (1, 3, 2), (2, 3, 3)])
def test_poly_coefficients_against_definition(a, d, k, weak, alternating):
    p = 7
    coefficients = poly_coefficients(a, d, k, p, weak=weak, alternating=alternating)
    assert len(coefficients) == p
    for x in range(p):
        direct = poly_value_direct(a, d, k, p, x, weak=weak, alternating=alternating)
        assert poly_value(coefficients, x, p) == direct


def test_poly_coefficients_marked_position():
    with pytest.raises(ValueError):
        poly_coefficients(1, 2, 3, 7)


@settings(max_examples=60, deadline=None)
@given(words(max_depth=4, max_part=3), st.sampled_from((11, 13, 17, 19, 101, 199)))
def test_reversal_relation(c, p):
    weight = sum(abs(s) for s in c)
    negatives = sum(1 for s in c if s < 0)
    sign = -1 if (weight + negatives) % 2 else 1
    mode = ResidueMode(p)
    for family in (SumFamily.H, SumFamily.S):
        value = eval_sum(family, c, p - 1, mode)
        assert value == sign * eval_sum(family, tuple(reversed(c)), p - 1, mode)


def test_residue_mode_needs_prime():
    with pytest.raises(ValueError):
        ResidueMode(9)
    with pytest.raises(ValueError):
        ResidueMode(1)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(list(SumFamily)),
    words(max_depth=3, max_part=4),
    st.sampled_from(list(sympy.primerange(3, 98))),
    st.integers(1, 3),
    st.data(),
)
def test_residue_dp_matches_naive(family, c, p, k, data):
    n = data.draw(st.integers(0, min(p - 1, 30)))
    mode = ResidueMode(p, k)
    assert eval_sum(family, c, n, mode) == eval_naive(family, c, n, mode)
