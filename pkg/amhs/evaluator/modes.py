from abc import ABC, abstractmethod
from fractions import Fraction
from threading import RLock
from typing import Any, List, Optional, Sequence, Tuple, Union

import gmpy2
from cachetools import LRUCache, cached

from ..errors import IndexNotInvertible
from ..residue import Residue, reduce_mod

Column = Sequence[Any]


@cached(LRUCache(maxsize=256), lock=RLock())
def inverses(n: int, modulus: int) -> Tuple[int, ...]:
    """1/j modulo ``modulus`` for j = 0..n (entry 0 unused)"""
    return (0,) + tuple(int(gmpy2.invert(j, modulus)) for j in range(1, n + 1))


@cached(LRUCache(maxsize=2048), lock=RLock())
def inverse_powers(exponent: int, n: int, modulus: int) -> Tuple[int, ...]:
    """j^(-exponent) modulo ``modulus`` for j = 0..n"""
    return tuple(pow(x, exponent, modulus) for x in inverses(n, modulus))


@cached(LRUCache(maxsize=256), lock=RLock())
def character(base: Fraction, n: int, modulus: int) -> Tuple[int, ...]:
    """base^j modulo ``modulus`` for j = 0..n"""
    b = base.numerator * int(gmpy2.invert(base.denominator, modulus)) % modulus
    values = [1]
    for _ in range(n):
        values.append(values[-1] * b % modulus)
    return tuple(values)


class EvalMode(ABC):
    """Arithmetic the nested-sum kernel runs in"""

    @property
    def modulus(self) -> Optional[int]:
        return None

    @abstractmethod
    def check_range(self, n: int, needs_half: bool = False) -> None:
        raise NotImplementedError()

    @abstractmethod
    def letter(self, base: Fraction, exponent: int, n: int) -> Column:
        """Column of base^j / j^exponent for j = 0..n"""
        raise NotImplementedError()

    @abstractmethod
    def lift(self, value: Any) -> Any:
        """Bring a rational (or int) into the mode's raw representation"""
        raise NotImplementedError()

    @abstractmethod
    def finish(self, raw: Any) -> Union[Fraction, Residue]:
        raise NotImplementedError()


class ExactMode(EvalMode):
    """Exact rationals"""

    def check_range(self, n: int, needs_half: bool = False) -> None:
        return None

    def letter(self, base: Fraction, exponent: int, n: int) -> List[Fraction]:
        column = [Fraction(0)]
        power = Fraction(1)
        for j in range(1, n + 1):
            power *= base
            column.append(power / j**exponent)
        return column

    def lift(self, value: Any) -> Fraction:
        return Fraction(value)

    def finish(self, raw: Any) -> Fraction:
        return Fraction(raw)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMode)

    def __hash__(self) -> int:
        return hash(ExactMode)

    def __repr__(self) -> str:
        return "ExactMode()"


class ResidueMode(EvalMode):
    """Residues modulo p^k; every index 1..n must be a unit"""

    def __init__(self, p: int, k: int = 1):
        if not gmpy2.is_prime(p):
            raise ValueError(f"Residue mode needs a prime, got {p}")
        if k < 1:
            raise ValueError(f"Power must be positive, got {k}")
        self.p = p
        self.k = k

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def check_range(self, n: int, needs_half: bool = False) -> None:
        if n >= self.p or (needs_half and self.p == 2):
            raise IndexNotInvertible(n, self.p)

    def letter(self, base: Fraction, exponent: int, n: int) -> Tuple[int, ...]:
        powers = inverse_powers(exponent, n, self.modulus)
        if base == 1:
            return powers
        chi = character(base, n, self.modulus)
        m = self.modulus
        return tuple(c * x % m for c, x in zip(chi, powers))

    def lift(self, value: Any) -> int:
        if isinstance(value, Residue):
            return value.value
        return reduce_mod(value, self.p, self.k).value

    def finish(self, raw: Any) -> Residue:
        return Residue(raw, self.p, self.k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ResidueMode) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((ResidueMode, self.p, self.k))

    def __repr__(self) -> str:
        return f"ResidueMode(p={self.p}, k={self.k})"


Mode = Union[ExactMode, ResidueMode]
