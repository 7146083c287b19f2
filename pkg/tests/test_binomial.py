from fractions import Fraction

import pytest

from amhs.errors import IndexNotInvertible
from amhs.evaluator import (
    ResidueMode,
    binomial_u_sum,
    eval_sum,
    power_difference,
    signed_binomial_sum,
    weak_shifted_sum,
)
from amhs.residue import reduce_mod

POINTS = [Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(5, 3)]


@pytest.mark.parametrize("x", POINTS)
@pytest.mark.parametrize("d", range(1, 5))
def test_shifted_sum_is_binomial_sum(d, x):
    for m in range(1, 26):
        assert weak_shifted_sum(x, d, m) == signed_binomial_sum(x, d, m), m


@pytest.mark.parametrize("x", POINTS)
@pytest.mark.parametrize("d", range(1, 5))
def test_binomial_u_is_power_difference(d, x):
    for m in range(1, 21):
        assert binomial_u_sum(x, d, m) == power_difference(x, d, m), m


@pytest.mark.parametrize(
    "side, x, d, m, expected",
    [
        (weak_shifted_sum, Fraction(2), 1, 2, Fraction(-2)),
        (signed_binomial_sum, Fraction(-1), 1, 2, Fraction(5, 2)),
        (binomial_u_sum, Fraction(1, 2), 2, 2, Fraction(-11, 16)),
        (power_difference, Fraction(2), 2, 2, Fraction(7, 4)),
    ],
)
def test_binomial_sum_values(side, x, d, m, expected):
    assert side(x, d, m) == expected


def test_empty_range_is_zero():
    for side in (weak_shifted_sum, signed_binomial_sum, binomial_u_sum, power_difference):
        assert side(Fraction(2), 3, 0) == 0


def test_power_difference_at_minus_one():
    m = 9
    expected = eval_sum("H", (-2,), m) - eval_sum("H", (2,), m)
    assert power_difference(Fraction(-1), 2, m) == expected


@pytest.mark.parametrize("x", POINTS)
@pytest.mark.parametrize("d", range(1, 5))
def test_residue_mode_reduces_exact_value(prime, d, x):
    m = prime - 1
    mode = ResidueMode(prime, 3)
    for side in (weak_shifted_sum, signed_binomial_sum, binomial_u_sum, power_difference):
        assert side(x, d, m, mode) == reduce_mod(side(x, d, m), prime, 3)


def test_residue_mode_needs_units(mod7):
    with pytest.raises(IndexNotInvertible):
        weak_shifted_sum(Fraction(2), 1, 7, mod7)
