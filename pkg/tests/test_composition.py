from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from amhs.composition import (
    Composition,
    Partition,
    c_lambda,
    coarsenings,
    compositions_of_weight,
    elementary_in_power_sums,
    h_from_s,
    increment_part,
    odd_partitions,
    oplus,
    parse_word,
    partitions,
    s_from_h,
)
from amhs.errors import ParseError
from amhs.evaluator import SumFamily, eval_sum

from .strategies import words


@pytest.mark.parametrize("s, t, expected", [(2, 3, 5), (-2, 3, -5), (-2, -3, 5)])
def test_oplus(s, t, expected):
    assert oplus(s, t) == expected


@pytest.mark.parametrize(
    "c, expected",
    [((1, -2, -1), (-1, -2, 1)), ((-3,), (-3,)), ((1, 1, -1, -1), (-1, -1, 1, 1))],
)
def test_reverse(c, expected):
    assert Composition(c).reverse() == expected


@pytest.mark.parametrize(
    "c, expected", [((1, 1), {(1, 1), (2,)}), ((1, -1), {(1, -1), (-2,)})]
)
def test_coarsenings(c, expected):
    assert set(coarsenings(c)) == expected


def test_coarsenings_count():
    assert len(coarsenings((1, -2, 3, -1))) == 8


def test_composition_codec():
    c = Composition.parse(" 1, -2 ,-1")
    assert c == (1, -2, -1)
    assert c.pack() == "1,-2,-1"
    assert c.weight() == 4
    assert c.depth() == 3
    assert c.sign_product() == 1


@pytest.mark.parametrize("text", ["", "1,,2", "1,0", "a,1", "1.5"])
def test_composition_parse_errors(text):
    with pytest.raises(ParseError):
        Composition.parse(text)


def test_parse_word_allows_empty():
    assert parse_word("") == ()
    assert parse_word("-3,2") == (-3, 2)


def test_increment_part_keeps_sign():
    assert increment_part((1, -2, 3), 1) == (1, -3, 3)
    assert increment_part((-1,), 0) == (-2,)


@pytest.mark.parametrize("w", range(1, 7))
def test_compositions_of_weight(w):
    signed = list(compositions_of_weight(w))
    assert len(signed) == len(set(signed)) == 2 * 3 ** (w - 1)
    assert all(c.weight() == w for c in signed)
    assert len(list(compositions_of_weight(w, signed=False))) == 2 ** (w - 1)


@pytest.mark.parametrize(
    "n, expected",
    [(2, {(1, 1)}), (3, {(1, 1, 1), (3,)}), (4, {(1, 1, 1, 1), (3, 1)})],
)
def test_odd_partitions(n, expected):
    assert set(odd_partitions(n)) == expected


def test_partitions_count():
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


@pytest.mark.parametrize(
    "lam, expected",
    [((1, 1, 1), 1), ((3,), 2), ((1, 3), 8), ((1, 1, 3), 20), ((1, 1, 1, 3), 40), ((3, 3), 40)],
)
def test_c_lambda(lam, expected):
    assert c_lambda(lam) == expected


def _newton_determinant(n: int):
    """n! e_n as the determinant of the Newton matrix in power sums"""
    ps = sympy.symbols(f"p1:{n + 1}")
    matrix = sympy.zeros(n, n)
    for i in range(n):
        for j in range(i + 1):
            matrix[i, j] = ps[i - j]
        if i + 1 < n:
            matrix[i, i + 1] = i + 1
    return sympy.Poly(sympy.expand(matrix.det()), *ps), ps


@pytest.mark.parametrize("n", range(1, 7))
def test_c_lambda_against_determinant(n):
    poly, ps = _newton_determinant(n)
    for lam in partitions(n):
        monomial = prod(ps[part - 1] for part in lam)
        assert poly.coeff_monomial(monomial) == c_lambda(lam)


def test_centralizer_order():
    assert Partition((1, 1, 3)).z() == 6
    assert dict(elementary_in_power_sums(1)) == {Partition((1,)): 1}
    # one variable equal to 1: e_4 vanishes
    assert sum(elementary_in_power_sums(4).values()) == 0


@settings(max_examples=60, deadline=None)
@given(words(max_depth=4, max_part=3))
def test_s_h_inclusion_exclusion_round_trip(c):
    def h(r):
        return eval_sum(SumFamily.H, r, 12)

    def s(r):
        return eval_sum(SumFamily.S, r, 12)

    assert s_from_h(c, h) == s(c)
    assert h_from_s(c, s) == h(c)


@given(st.integers(-30, 30).filter(bool), st.integers(-30, 30).filter(bool))
def test_oplus_is_commutative_and_adds_weights(s, t):
    assert oplus(s, t) == oplus(t, s)
    assert abs(oplus(s, t)) == abs(s) + abs(t)
