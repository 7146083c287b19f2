import math
from fractions import Fraction
from typing import Union

import gmpy2

from ..errors import NotPIntegral

RationalLike = Union[int, Fraction, str]

# valuation of zero
INFINITY = math.inf

_MPZ = type(gmpy2.mpz(0))


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce ``value`` to an exact :class:`~fractions.Fraction`

    :param value: int, mpz, Fraction or a string like ``"-37/60"``
    :return: value in lowest terms
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool can not be used as a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, _MPZ):
        return Fraction(int(value))
    raise TypeError(
        f"Value {value!r} of type {type(value).__name__!r} can not be used as a rational"
    )


def _multiplicity(n: int, p: int) -> int:
    if n == 0:
        return 0
    _, count = gmpy2.remove(abs(n), p)
    return int(count)


def valuation(r: RationalLike, p: int) -> Union[int, float]:
    """
    p-adic valuation v_p(r)

    :return: v_p(numerator) - v_p(denominator), or ``INFINITY`` for zero
    """
    r = as_rational(r)
    if r == 0:
        return INFINITY
    return _multiplicity(r.numerator, p) - _multiplicity(r.denominator, p)


def is_p_integral(r: RationalLike, p: int) -> bool:
    return as_rational(r).denominator % p != 0


def require_p_integral(r: RationalLike, p: int) -> Fraction:
    r = as_rational(r)
    if r.denominator % p == 0:
        raise NotPIntegral(r, p)
    return r


def fermat_quotient(p: int) -> Fraction:
    """
    Fermat quotient q_p = (2^(p-1) - 1) / p, always an integer for odd primes

    :param p: odd prime
    """
    if p == 2 or not gmpy2.is_prime(p):
        raise ValueError(f"Fermat quotient needs an odd prime, got {p}")
    return Fraction((2 ** (p - 1) - 1) // p)
