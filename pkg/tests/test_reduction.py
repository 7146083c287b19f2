import pytest
import sympy

from amhs.composition import compositions_of_weight
from amhs.evaluator import ResidueMode, SumFamily, eval_sum
from amhs.reduction import (
    negative_head_terms,
    positive_head_terms,
    reduce_head,
    reduce_negative_head,
    reduce_positive_head,
)
from amhs.residue import Residue, reduce_mod


def brute(head, tail, p):
    return eval_sum(SumFamily.H, (head,) + tuple(tail), p - 1, ResidueMode(p))


def test_positive_head_spot_value():
    assert reduce_positive_head(1, (-3,), 7).value == 6


@pytest.mark.parametrize("a, tail, p", [(1, (-3,), 7), (2, (1,), 11), (1, (1,), 5)])
def test_positive_head(a, tail, p):
    assert reduce_positive_head(a, tail, p) == brute(a, tail, p)


@pytest.mark.parametrize("a, tail, p", [(1, (1,), 7), (2, (-1,), 11), (3, (1, 1), 13)])
def test_negative_head(a, tail, p):
    assert reduce_negative_head(a, tail, p) == brute(-a, tail, p)


@pytest.mark.parametrize("a, tail, p", [(2, (1, -1), 11), (1, (-2, 1), 13)])
def test_term_sums_agree_with_fused_kernel(a, tail, p):
    positive = positive_head_terms(a, tail, p)
    negative = negative_head_terms(a, tail, p)
    assert all(len(c) == len(tail) for _, c in positive.terms)
    assert positive.evaluate() == reduce_positive_head(a, tail, p)
    assert negative.evaluate() == reduce_negative_head(a, tail, p)


def test_reduce_head_dispatches_on_sign():
    assert reduce_head(-2, (1,), 11) == reduce_negative_head(2, (1,), 11)
    assert reduce_head(2, (1,), 11) == reduce_positive_head(2, (1,), 11)


def test_reduction_preconditions():
    with pytest.raises(ValueError):
        reduce_positive_head(0, (1,), 7)
    with pytest.raises(ValueError):
        reduce_positive_head(6, (1,), 7)
    with pytest.raises(ValueError):
        reduce_negative_head(1, (1,), 9)


def test_reductions_at_small_primes(prime):
    for w in range(1, 4):
        for tail in compositions_of_weight(w):
            for a in range(1, 3):
                assert reduce_positive_head(a, tail, prime) == brute(a, tail, prime)
                assert reduce_negative_head(a, tail, prime) == brute(-a, tail, prime)


@pytest.mark.slow
@pytest.mark.parametrize("p", list(sympy.primerange(7, 200)))
def test_reductions_exhaustive(p):
    for a in range(1, 6):
        for w in range(1, 7 - a):
            for tail in compositions_of_weight(w):
                assert reduce_positive_head(a, tail, p) == brute(a, tail, p), (a, tail)
                assert reduce_negative_head(a, tail, p) == brute(-a, tail, p), (a, tail)


def folded(c, p):
    """exponents brought back into 1..p-1, signs kept"""
    return tuple((1 if s > 0 else -1) * ((abs(s) - 1) % (p - 1) + 1) for s in c)


@pytest.mark.parametrize("a, tail, p", [(2, (3,), 7), (3, (-2, 1), 11), (1, (4, -1), 7)])
def test_merged_exponents_fold_modulo_p_minus_one(a, tail, p):
    mode = ResidueMode(p)
    sums = (positive_head_terms(a, tail, p), negative_head_terms(a, tail, p))
    assert any(abs(s) >= p for terms in sums for _, c in terms.terms for s in c)
    for terms in sums:
        total = Residue(0, p)
        for coefficient, c in terms.terms:
            value = eval_sum(SumFamily.H, folded(c, p), p - 1, mode)
            total += reduce_mod(coefficient, p) * value
        assert total == terms.evaluate()
