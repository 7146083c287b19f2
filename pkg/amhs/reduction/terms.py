from fractions import Fraction
from math import comb
from typing import Iterable, List, Sequence, Tuple

import gmpy2

from ..composition import Composition, CompositionLike, as_composition, oplus
from ..evaluator import ResidueMode, SumFamily, eval_sum
from ..residue import Residue, reduce_mod, require_p_integral
from ..specialnum import bernoulli, euler_zero

Term = Tuple[Fraction, Composition]


class ReductionTermSum:
    """
    Right-hand side of a depth reduction: sum of c_i H(r_i; p-1) modulo p

    Every coefficient is p-integral and every r_i has the depth of the
    composition that was reduced minus one.
    """

    __slots__ = ("_terms", "_p")

    def __init__(self, terms: Iterable[Tuple[Fraction, CompositionLike]], p: int):
        collected: List[Term] = []
        for coefficient, composition in terms:
            collected.append((require_p_integral(coefficient, p), as_composition(composition)))
        depths = {len(c) for _, c in collected}
        if len(depths) > 1:
            raise ValueError(f"Reduction terms must share one depth, got {sorted(depths)}")
        self._terms = tuple(collected)
        self._p = p

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    @property
    def modulus(self) -> int:
        return self._p

    def __len__(self) -> int:
        return len(self._terms)

    def evaluate(self) -> Residue:
        """Term by term through the evaluator at n = p-1"""
        mode = ResidueMode(self._p)
        total = Residue(0, self._p)
        for coefficient, composition in self._terms:
            total += reduce_mod(coefficient, self._p) * eval_sum(
                SumFamily.H, composition, self._p - 1, mode
            )
        return total


def validate_head(a: int, tail: CompositionLike, p: int) -> Composition:
    tail = as_composition(tail)
    if a < 1:
        raise ValueError(f"Head exponent must be positive, got {a}")
    if not gmpy2.is_prime(p) or p < a + 2:
        raise ValueError(f"Reduction needs a prime p >= a + 2, got p={p}, a={a}")
    return tail


def positive_head_coefficients(a: int, p: int) -> List[Tuple[Fraction, int]]:
    """(c, m) pairs so that H(a, s) = sum c H(m (+) s_1, s') mod p"""
    pairs = [(Fraction(-1, a), a - 1)]
    for k in range(1, p - a):
        b = bernoulli(k)
        if b:
            pairs.append((comb(p - a, k) * b / (p - a), k + a - 1))
    return pairs


def negative_head_leading(a: int, p: int) -> Fraction:
    """(1 - 2^(p-a)) B_(p-a) / (p-a), p-integral also for a = 1"""
    return (1 - Fraction(2) ** (p - a)) * bernoulli(p - a) / (p - a)


def negative_head_coefficients(a: int, p: int) -> List[Tuple[Fraction, int]]:
    """(d, m) pairs for the sum - sum d H(m (+) (-s_1), s') mod p"""
    pairs = []
    for k in range(0, p - 1 - a):
        e = euler_zero(k)
        if e:
            pairs.append((comb(p - 1 - a, k) * e / 2, k + a))
    return pairs


def positive_head_terms(a: int, tail: CompositionLike, p: int) -> ReductionTermSum:
    tail = validate_head(a, tail, p)
    s1, rest = tail[0], tail.tail()
    return ReductionTermSum(
        ((c, (oplus(m, s1),) + rest) for c, m in positive_head_coefficients(a, p)), p
    )


def negative_head_terms(a: int, tail: CompositionLike, p: int) -> ReductionTermSum:
    tail = validate_head(a, tail, p)
    s1, rest = tail[0], tail.tail()
    lead = negative_head_leading(a, p)
    terms: List[Tuple[Fraction, Sequence[int]]] = [(lead, tail), (-lead, (-s1,) + rest)]
    terms += [(-d, (oplus(m, -s1),) + rest) for d, m in negative_head_coefficients(a, p)]
    return ReductionTermSum(terms, p)
