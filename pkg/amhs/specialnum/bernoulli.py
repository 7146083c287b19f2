import logging
from fractions import Fraction
from math import comb
from threading import RLock
from typing import ClassVar, List, Tuple

import gmpy2
from cachetools import LRUCache, cached

from ..residue import reduce_mod

logger = logging.getLogger(__name__)


def _tangent_numbers(count: int) -> List["gmpy2.mpz"]:
    """T_1..T_count (index 0 unused), integer-only in-place recurrence"""
    t = [gmpy2.mpz(0)] * (count + 1)
    if count == 0:
        return t
    t[1] = gmpy2.mpz(1)
    for k in range(2, count + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, count + 1):
        for j in range(k, count + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t


class BernoulliCache:
    """
    Growable table of exact Bernoulli numbers with B_1 = -1/2

    The sign of B_1 is the one for which the power-sum identity
    sum_{j<n} j^d = sum_r C(d+1, r) B_r n^(d+1-r) / (d+1) holds; the other
    convention breaks every reduction formula built on it.

    Entries come from tangent numbers,
    B_2m = (-1)^(m-1) 2m T_m / (4^m (4^m - 1)).
    Fills happen under a lock and at least double the table.
    """

    _table: ClassVar[Tuple[Fraction, ...]] = (Fraction(1), Fraction(-1, 2))
    _lock: ClassVar[RLock] = RLock()

    @classmethod
    def size(cls) -> int:
        return len(cls._table)

    @classmethod
    def get(cls, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be nonnegative, got {n}")
        table = cls._table
        if n >= len(table):
            cls.extend(n)
            table = cls._table
        return table[n]

    @classmethod
    def upto(cls, n: int) -> Tuple[Fraction, ...]:
        cls.get(n)
        return cls._table[: n + 1]

    @classmethod
    def extend(cls, n: int) -> None:
        with cls._lock:
            have = len(cls._table) - 1
            if n <= have:
                return
            target = max(n, 2 * have, 32)
            tangent = _tangent_numbers(target // 2)
            table = [Fraction(1), Fraction(-1, 2)]
            for index in range(2, target + 1):
                if index % 2:
                    table.append(Fraction(0))
                    continue
                m = index // 2
                four = gmpy2.mpz(4) ** m
                numerator = 2 * m * tangent[m]
                if m % 2 == 0:
                    numerator = -numerator
                table.append(Fraction(int(numerator), int(four * (four - 1))))
            cls._table = tuple(table)
            logger.debug("Bernoulli table extended to index %d", target)


def bernoulli(n: int) -> Fraction:
    """Exact B_n, memoized"""
    return BernoulliCache.get(n)


def bernoulli_table(n: int) -> Tuple[Fraction, ...]:
    """B_0..B_n"""
    return BernoulliCache.upto(n)


def bernoulli_by_recurrence(n: int) -> List[Fraction]:
    """
    B_0..B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0

    Quadratic in exact rationals; an independent oracle for the cached table.
    """
    table = [Fraction(1)]
    for m in range(1, n + 1):
        total = sum(comb(m + 1, k) * table[k] for k in range(m))
        table.append(-total / (m + 1))
    return table


@cached(LRUCache(maxsize=64), lock=RLock())
def bernoulli_residues(p: int, k: int = 1) -> Tuple[int, ...]:
    """
    B_0..B_{p-2} modulo p^k as plain integers

    These are exactly the p-integral Bernoulli numbers below index p-1.
    """
    return tuple(reduce_mod(b, p, k).value for b in bernoulli_table(p - 2))


def von_staudt_fraction(n: int) -> Fraction:
    """B_n + sum of 1/q over primes q with (q-1) | n; an integer for even n"""
    total = bernoulli(n)
    for d in range(1, n + 1):
        if n % d == 0 and gmpy2.is_prime(d + 1):
            total += Fraction(1, d + 1)
    return total


def chi(p: int, k: int) -> Fraction:
    """
    X_p(k) = B_{p-k} / (p-k) - B_{2p-1-k} / (2(2p-1-k))

    Exposed as a rational so the caller picks the reduction power.
    """
    if p < k + 3:
        raise ValueError(f"X_p(k) is used for p >= k + 3, got p={p}, k={k}")
    return bernoulli(p - k) / (p - k) - bernoulli(2 * p - 1 - k) / (2 * (2 * p - 1 - k))
