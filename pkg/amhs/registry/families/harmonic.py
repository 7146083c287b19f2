"""Depth-one sums: full and half range H(k), alternating H(-a), and H(1,2)"""

from fractions import Fraction
from typing import Iterator

from ...specialnum import bernoulli
from ..catalog import CatalogOptions, registry
from ..check import CongruenceCheck
from ..context import PrimeContext
from .common import congruence


def _full_range(k: int) -> CongruenceCheck:
    if k % 2:

        def rhs(ctx: PrimeContext):
            p = ctx.p
            return ctx.pk(2, Fraction(k * (k + 1), 2) * bernoulli(p - 2 - k) / (p - 2 - k))

        return congruence(
            "C01",
            statement="H(k) = k(k+1) p^2 B_(p-2-k) / (2(p-2-k)) mod p^3, k odd",
            lhs=lambda ctx: ctx.H(k),
            rhs=rhs,
            power=3,
            min_prime=k + 3,
            k=k,
        )
    return congruence(
        "C01",
        statement="H(k) = -2k X_p(k+1) p mod p^3, k even",
        lhs=lambda ctx: ctx.H(k),
        rhs=lambda ctx: ctx.pk(1, ctx.X(k + 1) * (-2 * k)),
        power=3,
        min_prime=k + 4,
        k=k,
    )


def _half_range(k: int) -> CongruenceCheck:
    if k == 1:

        def rhs(ctx: PrimeContext):
            q = ctx.q
            lead = -2 * q + ctx.pk(1, q**2)
            return lead + ctx.pk(2, q**3 * Fraction(-2, 3) + ctx.B(ctx.p - 3) * Fraction(-7, 12))

        return congruence(
            "C02",
            statement="H(1; (p-1)/2) = -2q + p q^2 - 2/3 p^2 q^3 - 7/12 p^2 B_(p-3) mod p^3",
            lhs=lambda ctx: ctx.Hh(1),
            rhs=rhs,
            power=3,
            min_prime=5,
            k=k,
        )
    if k % 2:
        return congruence(
            "C02",
            statement="H(k; (p-1)/2) = 2(2^k - 2) X_p(k) mod p^2, k > 1 odd",
            lhs=lambda ctx: ctx.Hh(k),
            rhs=lambda ctx: ctx.X(k) * (2 * (2**k - 2)),
            power=2,
            min_prime=k + 4,
            k=k,
        )
    return congruence(
        "C02",
        statement="H(k; (p-1)/2) = -k(2^(k+1) - 1) X_p(k+1) p mod p^3, k even",
        lhs=lambda ctx: ctx.Hh(k),
        rhs=lambda ctx: ctx.pk(1, ctx.X(k + 1) * (-k * (2 ** (k + 1) - 1))),
        power=3,
        min_prime=k + 4,
        k=k,
    )


def _alternating(a: int) -> CongruenceCheck:
    if a % 2:

        def rhs(ctx: PrimeContext):
            p = ctx.p
            return ctx.r(-2 * (1 - 2 ** (p - a)) * bernoulli(p - a) / a)

        return congruence(
            "C03",
            statement="H(-a) = -2(1 - 2^(p-a)) B_(p-a) / a mod p, a odd",
            lhs=lambda ctx: ctx.H(-a),
            rhs=rhs,
            min_prime=a + 2,
            a=a,
        )

    def rhs_even(ctx: PrimeContext):
        p = ctx.p
        return ctx.pk(1, a * (1 - 2 ** (p - 1 - a)) * bernoulli(p - 1 - a) / (a + 1))

    return congruence(
        "C03",
        statement="H(-a) = a(1 - 2^(p-1-a)) p B_(p-1-a) / (a+1) mod p^2, a even",
        lhs=lambda ctx: ctx.H(-a),
        rhs=rhs_even,
        power=2,
        min_prime=a + 2,
        a=a,
    )


@registry("C01")
def full_range(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for k in range(1, options.weight_cap + 3):
        yield _full_range(k)


@registry("C02")
def half_range(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for k in range(1, options.weight_cap + 3):
        yield _half_range(k)


@registry("C03")
def alternating_depth_one(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a in range(1, options.weight_cap + 3):
        yield _alternating(a)


@registry("C32")
def h12(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield congruence(
        "C32",
        "H12",
        statement="H(1,2) = -6 X_p(3) mod p^2",
        lhs=lambda ctx: ctx.H(1, 2),
        rhs=lambda ctx: ctx.X(3) * -6,
        power=2,
    )
    yield congruence(
        "C32",
        "H21",
        statement="H(2,1) = 6 X_p(3) mod p^2",
        lhs=lambda ctx: ctx.H(2, 1),
        rhs=lambda ctx: ctx.X(3) * 6,
        power=2,
    )
