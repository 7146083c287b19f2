"""Alternating double sums H(+-a, +-b) and S(+-a, +-b) modulo p"""

from fractions import Fraction
from math import comb
from threading import RLock
from typing import Callable, Iterator, Tuple

from cachetools import LRUCache, cached

from ...residue import Residue
from ...specialnum import bernoulli
from ..catalog import CatalogOptions, registry
from ..check import CongruenceCheck
from ..context import PrimeContext
from .common import congruence, positive_pairs

Closed = Callable[[PrimeContext], object]


def _odd_weight(a: int, b: int) -> Iterator[CongruenceCheck]:
    w = a + b
    sign_b = -1 if b % 2 else 1

    def plain(ctx: PrimeContext):
        return ctx.r(Fraction(sign_b * comb(w, a), w) * bernoulli(ctx.p - w))

    def both_negative(ctx: PrimeContext):
        factor = Fraction((2 ** (ctx.p - w) - 1) * sign_b * comb(w, a), w)
        return ctx.r(factor * bernoulli(ctx.p - w))

    def mixed_h(ctx: PrimeContext):
        return ctx.r(Fraction(1 - 2 ** (ctx.p - w), w) * bernoulli(ctx.p - w))

    def mixed_s(ctx: PrimeContext):
        return ctx.r(Fraction(2 ** (ctx.p - w) - 1, w) * bernoulli(ctx.p - w))

    cases = (
        ("H", (a, b), "H", plain),
        ("S", (a, b), "S", plain),
        ("Hnn", (-a, -b), "H", both_negative),
        ("Snn", (-a, -b), "S", both_negative),
        ("Hnp", (-a, b), "H", mixed_h),
        ("Hpn", (a, -b), "H", mixed_h),
        ("Snp", (-a, b), "S", mixed_s),
        ("Spn", (a, -b), "S", mixed_s),
    )
    for tag, parts, family, rhs in cases:
        statement = f"{family}{parts} closed form, a+b odd"
        yield _depth_two("C04", tag, parts, family, rhs, a, b, statement)


def _even_weight(a: int, b: int) -> Iterator[CongruenceCheck]:
    def both_negative(ctx: PrimeContext):
        p = ctx.p
        value = 2 * (1 - 2 ** (p - a)) * (1 - 2 ** (p - b)) * bernoulli(p - a) * bernoulli(p - b)
        return ctx.r(value / (a * b))

    cases = (
        ("H", (a, b), "H", lambda ctx: 0),
        ("S", (a, b), "S", lambda ctx: 0),
        ("Hnn", (-a, -b), "H", both_negative),
        ("Snn", (-a, -b), "S", both_negative),
    )
    for tag, parts, family, rhs in cases:
        statement = f"{family}{parts} closed form, a+b even"
        yield _depth_two("C04", tag, parts, family, rhs, a, b, statement)


def _depth_two(
    code: str,
    tag: str,
    parts: Tuple[int, int],
    family: str,
    rhs: Closed,
    a: int,
    b: int,
    statement: str,
    negate: bool = False,
) -> CongruenceCheck:
    def lhs(ctx: PrimeContext) -> Residue:
        value = getattr(ctx, family)(*parts)
        return -value if negate else value

    return congruence(
        code, tag, statement=statement, lhs=lhs, rhs=rhs, min_prime=a + b + 2, a=a, b=b
    )


@cached(LRUCache(maxsize=1024), lock=RLock())
def positive_first_sum(a: int, b: int, p: int) -> Residue:
    """
    sum_{k=0}^{p-a-1} C(p-a, k) (1 - 2^i) B_k B_i 2 / ((p-a) i),  i = 2p-a-b-k
    """
    ctx = PrimeContext(p)
    terms = []
    for k in range(p - a):
        i = 2 * p - a - b - k
        terms.append((Fraction(comb(p - a, k) * (1 - 2**i) * 2, (p - a) * i), (k, i)))
    return ctx.bernoulli_sum(terms)


@cached(LRUCache(maxsize=1024), lock=RLock())
def negative_first_sum(a: int, b: int, p: int) -> Residue:
    """
    Two Bernoulli convolutions, split where the second index passes p-1
    """
    ctx = PrimeContext(p)
    w = a + b
    terms = []
    for k in range(1, p - 1 - w):
        j = p - w - k
        coefficient = comb(p - 1 - a, k) * (1 - 2 ** (k + 1)) * (1 - 2**j) * 2
        terms.append((Fraction(coefficient, (k + 1) * (w + k)), (k + 1, j)))
    for k in range(p - 1 - w, p - a):
        j = 2 * p - 1 - w - k
        coefficient = comb(p - 1 - a, k) * (1 - 2 ** (k + 1)) * (1 - 2**j) * 2
        terms.append((Fraction(coefficient, (k + 1) * (1 + w + k)), (k + 1, j)))
    return ctx.bernoulli_sum(terms)


def _positive_first(a: int, b: int) -> Iterator[CongruenceCheck]:
    def rhs(ctx: PrimeContext):
        return positive_first_sum(a, b, ctx.p)

    statement = "H(a,-b) Bernoulli convolution, a+b even"
    yield _depth_two("C05", "H", (a, -b), "H", rhs, a, b, statement)
    statement = "S(a,-b) Bernoulli convolution, a+b even"
    yield _depth_two("C05", "S", (a, -b), "S", rhs, a, b, statement)
    yield _depth_two(
        "C05", "Hrev", (-b, a), "H", rhs, a, b, "-H(-b,a) Bernoulli convolution", negate=True
    )
    yield _depth_two(
        "C05", "Srev", (-b, a), "S", rhs, a, b, "-S(-b,a) Bernoulli convolution", negate=True
    )


def _negative_first(a: int, b: int) -> Iterator[CongruenceCheck]:
    def rhs(ctx: PrimeContext):
        return negative_first_sum(a, b, ctx.p)

    statement = "H(-a,b) Bernoulli convolution, a+b even"
    yield _depth_two("C06", "H", (-a, b), "H", rhs, a, b, statement)
    statement = "S(-a,b) Bernoulli convolution, a+b even"
    yield _depth_two("C06", "S", (-a, b), "S", rhs, a, b, statement)
    yield _depth_two(
        "C06", "Hrev", (b, -a), "H", rhs, a, b, "-H(b,-a) Bernoulli convolution", negate=True
    )
    yield _depth_two(
        "C06", "Srev", (b, -a), "S", rhs, a, b, "-S(b,-a) Bernoulli convolution", negate=True
    )


@registry("C04")
def depth_two_closed(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a, b in positive_pairs(options.weight_cap):
        if (a + b) % 2:
            yield from _odd_weight(a, b)
        else:
            yield from _even_weight(a, b)


@registry("C05")
def positive_first(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a, b in positive_pairs(options.weight_cap):
        if (a + b) % 2 == 0:
            yield from _positive_first(a, b)


@registry("C06")
def negative_first(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a, b in positive_pairs(options.weight_cap):
        if (a + b) % 2 == 0:
            yield from _negative_first(a, b)
