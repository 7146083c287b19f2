from fractions import Fraction
from math import comb

from ..residue import RationalLike, as_rational
from .bernoulli import bernoulli


def euler_zero(a: int) -> Fraction:
    """E_a(0) = 2 (1 - 2^(a+1)) B_{a+1} / (a+1)"""
    if a < 0:
        raise ValueError(f"Euler index must be nonnegative, got {a}")
    return 2 * (1 - 2 ** (a + 1)) * bernoulli(a + 1) / (a + 1)


def euler_poly(n: int, x: RationalLike) -> Fraction:
    """E_n(x) = sum_a C(n, a) E_a(0) x^(n-a)"""
    x = as_rational(x)
    return sum(
        (comb(n, a) * euler_zero(a) * x ** (n - a) for a in range(n + 1)),
        Fraction(0),
    )


def alt_power_sum(n: int, d: int) -> Fraction:
    """
    sum_{i=1}^{d-1} (-1)^i i^n through Euler polynomials

    The closed form (E_n(0) + (-1)^(d-1) E_n(d)) / 2 counts the i = 0 term,
    which is 1 only for n = 0.
    """
    if d < 1:
        raise ValueError(f"Upper limit must be positive, got {d}")
    sign = 1 if (d - 1) % 2 == 0 else -1
    total = (euler_zero(n) + sign * euler_poly(n, d)) / 2
    if n == 0:
        total -= 1
    return total


def alt_power_sum_direct(n: int, d: int) -> Fraction:
    return Fraction(sum((-1) ** i * i**n for i in range(1, d)))


def power_sum(n: int, d: int) -> Fraction:
    """sum_{j=1}^{n-1} j^d by direct summation"""
    return Fraction(sum(j**d for j in range(1, n)))


def power_sum_closed(n: int, d: int) -> Fraction:
    """sum_{r=0}^{d} C(d+1, r) B_r n^(d+1-r) / (d+1)"""
    return sum(
        (comb(d + 1, r) * bernoulli(r) * n ** (d + 1 - r) for r in range(d + 1)),
        Fraction(0),
    ) / (d + 1)
