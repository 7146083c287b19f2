from fractions import Fraction
from typing import Union

import gmpy2

from ..errors import ModulusMismatch, NotPIntegral
from .rational import RationalLike, as_rational, require_p_integral

Operand = Union["Residue", int, Fraction]


class Residue:
    """
    Element of Z/p^k Z carrying its ring (p, k)

    Instances are immutable. Arithmetic accepts another residue of the same
    ring, an ``int`` or a p-integral ``Fraction``; plain operands are reduced
    into the ring first.
    """

    __slots__ = ("_value", "_p", "_k")

    def __init__(self, value: int, p: int, k: int = 1):
        if k < 1:
            raise ValueError(f"Power must be positive, got {k}")
        if p < 2:
            raise ValueError(f"Modulus base must be a prime, got {p}")
        self._p = p
        self._k = k
        self._value = int(value) % p**k

    @property
    def value(self) -> int:
        return self._value

    @property
    def p(self) -> int:
        return self._p

    @property
    def k(self) -> int:
        return self._k

    @property
    def modulus(self) -> int:
        return self._p**self._k

    def _coerce(self, other: object):
        if isinstance(other, Residue):
            if other._p != self._p or other._k != self._k:
                raise ModulusMismatch(self, other)
            return other._value
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            other = require_p_integral(other, self._p)
            return other.numerator * int(gmpy2.invert(other.denominator, self.modulus))
        return None

    def _new(self, value: int) -> "Residue":
        return Residue(value, self._p, self._k)

    def __add__(self, other: Operand) -> "Residue":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(self._value + value)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "Residue":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(self._value - value)

    def __rsub__(self, other: Operand) -> "Residue":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(value - self._value)

    def __mul__(self, other: Operand) -> "Residue":
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._new(self._value * value)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "Residue":
        if isinstance(other, Residue):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __neg__(self) -> "Residue":
        return self._new(-self._value)

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self._new(pow(self._value, exponent, self.modulus))

    def inverse(self) -> "Residue":
        if self._value % self._p == 0:
            raise NotPIntegral(Fraction(1, self._value or self.modulus), self._p)
        return self._new(int(gmpy2.invert(self._value, self.modulus)))

    def project(self, k: int) -> "Residue":
        """Image in Z/p^k Z for k not above the current power"""
        if not 1 <= k <= self._k:
            raise ValueError(f"Can not project modulo {self._p}^{self._k} to power {k}")
        return Residue(self._value, self._p, k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return (self._value, self._p, self._k) == (other._value, other._p, other._k)
        try:
            value = self._coerce(other)
        except NotPIntegral:
            return False
        if value is None:
            return NotImplemented
        return (value - self._value) % self.modulus == 0

    def __hash__(self) -> int:
        # agrees with the canonical representative in 0..p^k-1
        return hash(self._value)

    def __int__(self) -> int:
        return self._value

    def __repr__(self) -> str:
        return f"Residue({self._value}, p={self._p}, k={self._k})"

    def __str__(self) -> str:
        if self._k == 1:
            return f"{self._value} (mod {self._p})"
        return f"{self._value} (mod {self._p}^{self._k})"


def reduce_mod(r: RationalLike, p: int, k: int = 1) -> Residue:
    """
    Reduce a p-integral rational into Z/p^k Z

    :raises NotPIntegral: when p divides the denominator of ``r``
    """

    r = require_p_integral(as_rational(r), p)
    modulus = p**k
    return Residue(r.numerator * int(gmpy2.invert(r.denominator, modulus)), p, k)
