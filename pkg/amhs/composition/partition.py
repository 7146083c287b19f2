from collections import Counter
from fractions import Fraction
from math import factorial
from threading import RLock
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping

from cachetools import LRUCache, cached


class Partition(tuple):
    """Unordered integer partition, stored with parts in nonincreasing order"""

    def __new__(cls, parts: Iterable[int]) -> "Partition":
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if any(x <= 0 for x in parts):
            raise ValueError(f"Partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def is_odd(self) -> bool:
        return all(x % 2 for x in self)

    def z(self) -> int:
        """Centralizer order z_lambda = prod_i i^(m_i) m_i!"""
        result = 1
        for part, multiplicity in Counter(self).items():
            result *= part**multiplicity * factorial(multiplicity)
        return result

    def with_part(self, part: int) -> "Partition":
        return Partition(self + (part,))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of n, largest first part first"""

    def build(rest: int, largest: int) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in build(rest - first, first):
                yield (first,) + tail

    for parts in build(n, n):
        yield Partition(parts)


def odd_partitions(n: int) -> List[Partition]:
    if n < 1:
        raise ValueError(f"Partitions are taken of positive integers, got {n}")
    return [lam for lam in partitions(n) if lam.is_odd()]


@cached(LRUCache(maxsize=32), lock=RLock())
def elementary_in_power_sums(n: int) -> Mapping[Partition, Fraction]:
    """
    e_n written in the power sums p_lambda, via Newton's identities

    n e_n = sum_{i=1}^{n} (-1)^(i-1) e_{n-i} p_i
    """
    if n == 0:
        return MappingProxyType({Partition(()): Fraction(1)})
    result: Dict[Partition, Fraction] = {}
    for i in range(1, n + 1):
        sign = 1 if i % 2 else -1
        for lam, coefficient in elementary_in_power_sums(n - i).items():
            key = lam.with_part(i)
            result[key] = result.get(key, Fraction(0)) + sign * coefficient / n
    return MappingProxyType({lam: c for lam, c in result.items() if c})


def c_lambda(lam: Iterable[int]) -> int:
    """
    Coefficient of p_lambda in l! e_l, l = |lambda|

    Equal to l! (-1)^(l - len(lambda)) / z_lambda.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    n = lam.size()
    value = factorial(n) * elementary_in_power_sums(n).get(lam, Fraction(0))
    if value.denominator != 1:
        raise ArithmeticError(f"c_lambda({lam}) is not an integer: {value}")
    return int(value)
