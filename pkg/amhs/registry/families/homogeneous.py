"""Homogeneous and nearly homogeneous compositions, palindromes, marked-index polynomials"""

from fractions import Fraction
from math import factorial
from typing import Iterator, Tuple

from ...composition import Composition, c_lambda, odd_partitions
from ...evaluator import poly_coefficients
from ...residue import Residue
from ..catalog import CatalogOptions, registry
from ..check import CongruenceCheck
from ..context import PrimeContext
from .common import congruence, signed_compositions


def _power_sum_formula(a: int, length: int) -> CongruenceCheck:
    def rhs(ctx: PrimeContext) -> Residue:
        total = ctx.r(0)
        for lam in odd_partitions(length):
            term = ctx.r(c_lambda(lam))
            for part in lam:
                term *= ctx.H(-a * part)
            total += term
        return total

    return congruence(
        "C09",
        "cgl",
        statement="l! H({-a}^l) = sum over odd partitions c_lambda prod H(-a lambda_i) mod p",
        lhs=lambda ctx: factorial(length) * ctx.H(*[-a] * length),
        rhs=rhs,
        min_prime=a * length + 2,
        a=a,
        l=length,
    )


def _minus_ones(ctx: PrimeContext, length: int) -> Residue:
    q, b3 = ctx.q, ctx.B(ctx.p - 3)
    if length == 2:
        return 2 * q**2
    if length == 3:
        return Fraction(-4, 3) * q**3 - b3 / 6
    if length == 4:
        return Fraction(2, 3) * q**4 + q * b3 / 3
    b5 = ctx.B(ctx.p - 5)
    if length == 5:
        return Fraction(-4, 15) * q**5 - q**2 * b3 / 3 - Fraction(3, 40) * b5
    return (
        Fraction(4, 45) * q**6
        + Fraction(2, 9) * q**3 * b3
        + b3**2 / 72
        + Fraction(3, 20) * q * b5
    )


def _minus_one_string(length: int) -> CongruenceCheck:
    return congruence(
        "C09",
        "minus-one",
        statement="H({-1}^l) in q_p, B_(p-3) and B_(p-5) mod p",
        lhs=lambda ctx: ctx.H(*[-1] * length),
        rhs=lambda ctx: _minus_ones(ctx, length),
        min_prime=11 if length >= 5 else 7,
        l=length,
    )


def _alternating_harmonic(ctx: PrimeContext) -> Residue:
    q = ctx.q
    tail = Fraction(-2, 3) * q**3 - ctx.B(ctx.p - 3) / 4
    return -2 * q + ctx.pk(1, q**2) + ctx.pk(2, tail)


@registry("C09")
def homogeneous(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a in range(1, options.weight_cap // 2 + 1):
        for length in range(2, options.weight_cap // a + 1):
            yield _power_sum_formula(a, length)
    for length in range(2, 7):
        yield _minus_one_string(length)
    yield congruence(
        "C09",
        "depth-one",
        statement="H(-1) = -2q + p q^2 - 2/3 p^2 q^3 - 1/4 p^2 B_(p-3) mod p^3",
        lhs=lambda ctx: ctx.H(-1),
        rhs=_alternating_harmonic,
        power=3,
    )


def _is_palindrome(s: Composition) -> bool:
    return tuple(s) == tuple(reversed(s))


def _vanishing(s: Composition, family: str) -> CongruenceCheck:
    return congruence(
        "C10",
        family,
        statement=f"{family}{tuple(s)} = 0 mod p for a palindrome with odd (negatives + weight)",
        lhs=lambda ctx: getattr(ctx, family)(*s),
        rhs=lambda ctx: 0,
        min_prime=s.weight() + 2,
        s=tuple(s),
    )


@registry("C10")
def palindromes(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for s in signed_compositions(options.weight_cap):
        negatives = sum(1 for part in s if part < 0)
        if _is_palindrome(s) and (negatives + s.weight()) % 2:
            yield _vanishing(s, "H")
            yield _vanishing(s, "S")


def _minus_one_ones(n: int) -> Iterator[CongruenceCheck]:
    sign = -1 if n % 2 else 1
    ones = (1,) * n

    def u(ctx: PrimeContext) -> Residue:
        return ctx.U(-n - 1)

    cases = (
        ("H", lambda ctx: ctx.H(-1, *ones), "H(-1,{1}^n)"),
        ("S", lambda ctx: ctx.S(-1, *ones), "S(-1,{1}^n)"),
        ("Hrev", lambda ctx: sign * ctx.H(*ones, -1), "(-1)^n H({1}^n,-1)"),
        ("Srev", lambda ctx: sign * ctx.S(*ones, -1), "(-1)^n S({1}^n,-1)"),
        ("V", lambda ctx: -sign * 2 * ctx.V(-n - 1), "-2(-1)^n V(-n-1)"),
    )
    for tag, lhs, text in cases:
        yield congruence(
            "C11",
            tag,
            statement=f"{text} = U(-n-1) mod p",
            lhs=lhs,
            rhs=u,
            min_prime=n + 3,
            n=n,
        )


@registry("C11")
def minus_one_then_ones(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for n in range(options.weight_cap):
        yield from _minus_one_ones(n)


def _homogeneous_triples(
    max_weight: int, even_only: bool = False
) -> Iterator[Tuple[int, int, int]]:
    for a in range(2 if even_only else 1, max_weight + 1, 2 if even_only else 1):
        for total in range(max_weight // a):
            for m in range(total + 1):
                yield a, m, total - m


def _one_negative(a: int, m: int, n: int) -> Iterator[CongruenceCheck]:
    lhs_parts = (a,) * m + (-a,) + (a,) * n
    swapped = (a,) * n + (-a,) + (a,) * m
    mirror = -1 if (m + n) % 2 else 1
    twist = -1 if (m + n + 1) * (a + 1) % 2 else 1
    yield congruence(
        "C12",
        "rev",
        statement="H({a}^m,-a,{a}^n) = (-1)^(m+n) S({a}^n,-a,{a}^m) mod p",
        lhs=lambda ctx: ctx.H(*lhs_parts),
        rhs=lambda ctx: mirror * ctx.S(*swapped),
        min_prime=a * (m + n) + 3,
        a=a,
        m=m,
        n=n,
    )
    yield congruence(
        "C12",
        "same",
        statement="H({a}^m,-a,{a}^n) = (-1)^((m+n+1)(a+1)) S({a}^m,-a,{a}^n) mod p",
        lhs=lambda ctx: ctx.H(*lhs_parts),
        rhs=lambda ctx: twist * ctx.S(*lhs_parts),
        min_prime=a * (m + n) + 3,
        a=a,
        m=m,
        n=n,
    )


@registry("C12")
def one_negative(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a, m, n in _homogeneous_triples(options.weight_cap):
        yield from _one_negative(a, m, n)


def _vector(p: int, coefficients: Tuple[int, ...], scale: int = 1) -> Tuple[Residue, ...]:
    return tuple(Residue(scale * c, p) for c in coefficients)


def _marked(a: int, d: int, k: int, alternating: bool) -> CongruenceCheck:
    sign = -1 if d % 2 else 1

    def lhs(ctx: PrimeContext):
        return _vector(ctx.p, poly_coefficients(a, d, k, ctx.p, alternating=alternating))

    def rhs(ctx: PrimeContext):
        coefficients = poly_coefficients(
            a, d, d + 1 - k, ctx.p, weak=True, alternating=alternating
        )
        return _vector(ctx.p, coefficients, -sign)

    lower, upper = ("h", "s") if alternating else ("H", "S")
    return congruence(
        "C13",
        "HS2" if alternating else "HS1",
        statement=f"{lower}_(d,k) + (-1)^d {upper}_(d,d+1-k) = 0 in F_p[x]",
        lhs=lhs,
        rhs=rhs,
        min_prime=d * a + 3,
        a=a,
        d=d,
        k=k,
    )


@registry("C13")
def marked_polynomials(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a in range(1, options.weight_cap + 1):
        for d in range(1, options.weight_cap // a + 1):
            for k in range(1, d + 1):
                yield _marked(a, d, k, alternating=False)
                if a % 2 == 0:
                    yield _marked(a, d, k, alternating=True)


def _one_positive(a: int, m: int, n: int) -> Iterator[CongruenceCheck]:
    parts = (-a,) * m + (a,) + (-a,) * n
    swapped = (-a,) * n + (a,) + (-a,) * m
    mirror = -1 if (m + n) % 2 else 1
    yield congruence(
        "C14",
        "same",
        statement="H({-a}^m,a,{-a}^n) = S({-a}^m,a,{-a}^n) mod p, a even",
        lhs=lambda ctx: ctx.H(*parts),
        rhs=lambda ctx: ctx.S(*parts),
        min_prime=a * (m + n) + 3,
        a=a,
        m=m,
        n=n,
    )
    yield congruence(
        "C14",
        "rev",
        statement="H({-a}^m,a,{-a}^n) = (-1)^(m+n) S({-a}^n,a,{-a}^m) mod p, a even",
        lhs=lambda ctx: ctx.H(*parts),
        rhs=lambda ctx: mirror * ctx.S(*swapped),
        min_prime=a * (m + n) + 3,
        a=a,
        m=m,
        n=n,
    )


@registry("C14")
def one_positive(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a, m, n in _homogeneous_triples(options.weight_cap, even_only=True):
        yield from _one_positive(a, m, n)
