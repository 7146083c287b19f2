from fractions import Fraction
from threading import RLock
from typing import Iterable, Optional, Sequence, Tuple, Union

import gmpy2
from cachetools import LRUCache, cached

from ..evaluator import ResidueMode, SumFamily, eval_sum, half
from ..residue import RationalLike, Residue, fermat_quotient, reduce_mod
from ..specialnum import (
    ConvolutionConstants,
    bernoulli,
    bernoulli_residues,
    chi,
    convolution_constants,
)

BernoulliTerm = Tuple[RationalLike, Sequence[int]]


@cached(LRUCache(maxsize=16384), lock=RLock())
def bernoulli_residue(n: int, p: int, k: int = 1) -> int:
    """
    B_n modulo p^k for any p-integral index

    :raises NotPIntegral: when (p - 1) divides n > 0
    """
    if n <= p - 2:
        return bernoulli_residues(p, k)[n]
    return reduce_mod(bernoulli(n), p, k).value


class PrimeContext:
    """
    Everything a check recipe evaluates, bound to one ring Z/p^k Z

    Sums default to the full range n = p - 1. Every accessor returns a
    :class:`Residue` modulo p^k, except :attr:`conv` whose constants are only
    known modulo p; lift those with :meth:`pk`.
    """

    def __init__(self, p: int, k: int = 1):
        if not gmpy2.is_prime(p) or p < 3:
            raise ValueError(f"Checks run at odd primes, got {p}")
        self.p = p
        self.k = k
        self.mode = ResidueMode(p, k)

    def _sum(self, family: SumFamily, parts: Sequence[int], n: Optional[int]) -> Residue:
        return eval_sum(family, tuple(parts), self.p - 1 if n is None else n, self.mode)

    def H(self, *parts: int, n: Optional[int] = None) -> Residue:
        return self._sum(SumFamily.H, parts, n)

    def S(self, *parts: int, n: Optional[int] = None) -> Residue:
        return self._sum(SumFamily.S, parts, n)

    def U(self, *parts: int, n: Optional[int] = None) -> Residue:
        return self._sum(SumFamily.U, parts, n)

    def V(self, *parts: int, n: Optional[int] = None) -> Residue:
        return self._sum(SumFamily.V, parts, n)

    def Hh(self, *parts: int) -> Residue:
        """H over the half range n = (p-1)/2"""
        return self._sum(SumFamily.H, parts, half(self.p))

    def r(self, value: Union[RationalLike, Residue]) -> Residue:
        if isinstance(value, Residue):
            return value
        return reduce_mod(value, self.p, self.k)

    def pk(self, e: int, x: Union[RationalLike, Residue]) -> Residue:
        """
        p^e x modulo p^k

        ``x`` only has to be known modulo p^(k-e), so residues of a lower
        power (the convolution constants, for instance) are accepted.
        """
        if e >= self.k:
            return Residue(0, self.p, self.k)
        if isinstance(x, Residue):
            if x.p != self.p or x.k < self.k - e:
                raise ValueError(f"{x!r} is too coarse to be lifted by p^{e} into {self.mode!r}")
            return Residue(self.p**e * x.value, self.p, self.k)
        return Residue(self.p**e * self.r(x).value, self.p, self.k)

    def two(self, e: int) -> Residue:
        return Residue(2, self.p, self.k) ** e

    @property
    def q(self) -> Residue:
        """Fermat quotient (2^(p-1) - 1) / p"""
        return self.r(fermat_quotient(self.p))

    def B(self, n: int) -> Residue:
        return Residue(bernoulli_residue(n, self.p, self.k), self.p, self.k)

    def X(self, k: int) -> Residue:
        return self.r(chi(self.p, k))

    @property
    def conv(self) -> ConvolutionConstants:
        return convolution_constants(self.p)

    @property
    def h31(self) -> Residue:
        return self.Hh(3, 1)

    def bernoulli_sum(self, terms: Iterable[BernoulliTerm]) -> Residue:
        """
        sum of c * B_(n_1) * ... * B_(n_r) reduced term by term

        Terms with a vanishing factor are dropped before anything is reduced.
        A term whose coefficient or Bernoulli factor is not p-integral on its
        own is multiplied out exactly first, so cancelling powers of p meet.
        """
        total = Residue(0, self.p, self.k)
        for coefficient, indices in terms:
            if not coefficient or any(n > 1 and n % 2 for n in indices):
                continue
            coefficient = Fraction(coefficient)
            if coefficient.denominator % self.p == 0 or any(
                n and n % (self.p - 1) == 0 for n in indices
            ):
                exact = coefficient
                for n in indices:
                    exact *= bernoulli(n)
                total += self.r(exact)
                continue
            term = self.r(coefficient)
            for n in indices:
                term *= self.B(n)
            total += term
        return total

    def __repr__(self) -> str:
        return f"PrimeContext(p={self.p}, k={self.k})"
