from fractions import Fraction

import pytest
import sympy

from amhs.errors import NotPIntegral
from amhs.residue import reduce_mod
from amhs.specialnum import (
    BernoulliCache,
    alt_power_sum,
    alt_power_sum_direct,
    bernoulli,
    bernoulli_by_recurrence,
    bernoulli_residues,
    bernoulli_table,
    chi,
    convolution_constants,
    euler_poly,
    euler_zero,
    power_sum,
    power_sum_closed,
    von_staudt_fraction,
)


@pytest.mark.parametrize(
    "n, expected",
    [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, 0),
     (12, Fraction(-691, 2730))],
)
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_table_matches_recurrence():
    assert list(bernoulli_table(60)) == bernoulli_by_recurrence(60)
    assert BernoulliCache.size() > 60


def test_bernoulli_rejects_negative_index():
    with pytest.raises(ValueError):
        bernoulli(-1)


@pytest.mark.parametrize("n", range(2, 61, 2))
def test_von_staudt_clausen(n):
    assert von_staudt_fraction(n).denominator == 1


def test_bernoulli_residues_stop_before_p_minus_one():
    residues = bernoulli_residues(11)
    assert len(residues) == 10
    assert residues[2] == reduce_mod(Fraction(1, 6), 11).value
    with pytest.raises(NotPIntegral):
        reduce_mod(bernoulli(10), 11)


@pytest.mark.parametrize("a, expected", [(0, 1), (1, Fraction(-1, 2)), (2, 0)])
def test_euler_zero(a, expected):
    assert euler_zero(a) == expected


@pytest.mark.parametrize(
    "n, x, expected", [(0, 5, 1), (1, Fraction(1, 2), 0), (2, 4, 12)]
)
def test_euler_poly(n, x, expected):
    assert euler_poly(n, x) == expected


@pytest.mark.parametrize("n, d, expected", [(2, 4, -6), (0, 3, 0), (5, 2, -1)])
def test_alt_power_sum(n, d, expected):
    assert alt_power_sum(n, d) == expected


@pytest.mark.parametrize("n", range(0, 13))
def test_alt_power_sum_closed_form(n):
    for d in range(1, 21):
        assert alt_power_sum(n, d) == alt_power_sum_direct(n, d)


@pytest.mark.parametrize("d", range(1, 21))
def test_power_sum_closed_form(d):
    for n in range(1, 21):
        assert power_sum(n, d) == power_sum_closed(n, d)


def test_chi():
    assert chi(7, 3) == Fraction(-2, 165)
    assert reduce_mod(chi(7, 3), 7).value == 3
    with pytest.raises(ValueError):
        chi(5, 3)


def test_chi_reduces_through_kummer():
    assert reduce_mod(chi(11, 3), 11) == reduce_mod(-bernoulli(8) / 6, 11)


@pytest.mark.parametrize("p", list(sympy.primerange(11, 101)))
def test_kummer_congruence(p):
    for k in (2, 3, 4):
        n, m = 2 * p - 1 - k, p - k
        assert reduce_mod(bernoulli(n) / n - bernoulli(m) / m, p).value == 0, k


def test_convolution_constants_at_seven():
    c = convolution_constants(7)
    assert c.A.value == 4
    assert (c.B - c.A).value == 6


@pytest.mark.parametrize("p", [7, 11, 13, 37, 101])
def test_plain_weighted_convolution_vanishes(p):
    assert convolution_constants(p).G == 0


def test_convolution_constants_need_prime():
    with pytest.raises(ValueError):
        convolution_constants(9)
