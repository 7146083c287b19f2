from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amhs.evaluator import ResidueMode
from amhs.stuffle import WordSum, homomorphism_check, stuffle_product

from .strategies import words


def test_single_letter_times_two_letters():
    product = stuffle_product((-2,), (-3, 2))
    assert product == WordSum(
        {(-2, -3, 2): 1, (-3, -2, 2): 1, (-3, 2, -2): 1, (5, 2): 1, (-3, -4): 1}
    )


def test_unit():
    w = WordSum.word((1, -2))
    assert WordSum.unit() * w == w
    assert w * WordSum.unit() == w
    assert str(stuffle_product((1,), ())) == "1·(1)"


def test_single_letters():
    assert str(stuffle_product((1,), (1,))) == "2·(1,1) + 1·(2)"


def test_word_sum_algebra():
    w = WordSum.word((1,)) + WordSum.word((2,), 3)
    assert (w - w) == WordSum()
    assert len(w * 2) == 2
    assert (2 * w).coefficient((2,)) == 6
    assert w.coefficient_sum() == 4
    with pytest.raises(ValueError):
        WordSum({(1, 0): 1})


@pytest.mark.parametrize("d1, d2", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
def test_term_count_is_delannoy(d1, d2):
    product = stuffle_product(tuple(range(1, d1 + 1)), tuple(range(10, 10 + d2)))
    expected = sum(comb(d1, j) * comb(d2, j) * 2**j for j in range(min(d1, d2) + 1))
    assert product.coefficient_sum() == expected


def test_stuffle_is_commutative_and_associative():
    a, b, c = WordSum.word((1, -2)), WordSum.word((-1,)), WordSum.word((3,))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize(
    "w1, w2, n", [((-2,), (-3, 2), 10), ((1,), (1,), 1), ((), (1, -1), 5)]
)
def test_homomorphism_examples(w1, w2, n):
    assert homomorphism_check(w1, w2, n)


@settings(max_examples=200, deadline=None, derandomize=True)
@given(
    words(max_depth=3, max_part=2, min_depth=0),
    words(max_depth=3, max_part=2, min_depth=0),
    st.integers(0, 40),
)
def test_homomorphism_property(w1, w2, n):
    assert homomorphism_check(w1, w2, n)


@settings(max_examples=40, deadline=None)
@given(words(max_depth=3, max_part=3), words(max_depth=3, max_part=3))
def test_homomorphism_modulo_prime_power(w1, w2):
    assert homomorphism_check(w1, w2, 12, ResidueMode(13, 3))
