"""
Congruences modulo higher powers of p: the U and V sums, reversal with
p-corrections, the binomial lemmas, and low-weight H values modulo p^2 to p^4
"""

from fractions import Fraction
from math import comb
from typing import Callable, Iterator, List, Sequence, Tuple

from ...composition import Composition, increment_part
from ...evaluator import (
    binomial_u_sum,
    inverse_powers,
    power_difference,
    signed_binomial_sum,
    weak_shifted_sum,
)
from ...residue import Residue
from ..catalog import CatalogOptions, registry
from ..check import CongruenceCheck
from ..context import PrimeContext
from .common import congruence, signed_compositions

Formula = Callable[[PrimeContext], Residue]


def _b3(ctx: PrimeContext) -> Residue:
    return ctx.B(ctx.p - 3)


def _qb(ctx: PrimeContext) -> Residue:
    return ctx.q * _b3(ctx)


def _ab(ctx: PrimeContext) -> Residue:
    """A - B, known modulo p"""
    return ctx.conv.A - ctx.conv.B


def _entries(
    code: str, entries: Sequence[Tuple[str, int, str, Formula, Formula]]
) -> Iterator[CongruenceCheck]:
    for tag, power, statement, lhs, rhs in entries:
        yield congruence(
            code, *tag.split("."), statement=statement, lhs=lhs, rhs=rhs, power=power
        )


@registry("C22")
def u_sums(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    third = Fraction(1, 3)
    yield from _entries(
        "C22",
        (
            (
                "U-1",
                3,
                "U(-1) = -2q - 7/12 p^2 B_(p-3) mod p^3",
                lambda c: c.U(-1),
                lambda c: -2 * c.q + c.pk(2, _b3(c) * Fraction(-7, 12)),
            ),
            (
                "U-2",
                2,
                "U(-2) = -q^2 + 2/3 p q^3 + 7/6 p B_(p-3) mod p^2",
                lambda c: c.U(-2),
                lambda c: -(c.q**2) + c.pk(1, 2 * third * c.q**3 + 7 * _b3(c) / 6),
            ),
            (
                "U-1_1",
                2,
                "U(-1,1) = q^2 - 2/3 p q^3 - p B_(p-3) / 12 mod p^2",
                lambda c: c.U(-1, 1),
                lambda c: c.q**2 - c.pk(1, 2 * third * c.q**3 + _b3(c) / 12),
            ),
            (
                "U1_-1",
                2,
                "U(1,-1) = -13/12 p B_(p-3) mod p^2",
                lambda c: c.U(1, -1),
                lambda c: c.pk(1, -13 * _b3(c) / 12),
            ),
            (
                "U-3",
                1,
                "U(-3) = -q^3/3 - 7/24 B_(p-3)",
                lambda c: c.U(-3),
                lambda c: -(c.q**3) / 3 - 7 * _b3(c) / 24,
            ),
            (
                "U-2_1",
                1,
                "U(-2,1) = q^3/3 - 23/24 B_(p-3)",
                lambda c: c.U(-2, 1),
                lambda c: c.q**3 / 3 - 23 * _b3(c) / 24,
            ),
            (
                "U1_-2",
                1,
                "U(1,-2) = 5/4 B_(p-3)",
                lambda c: c.U(1, -2),
                lambda c: 5 * _b3(c) / 4,
            ),
            (
                "U2_-1",
                1,
                "U(2,-1) = -3/4 B_(p-3)",
                lambda c: c.U(2, -1),
                lambda c: -3 * _b3(c) / 4,
            ),
            (
                "U-1_2",
                1,
                "U(-1,2) = q^3/3 + 25/24 B_(p-3)",
                lambda c: c.U(-1, 2),
                lambda c: c.q**3 / 3 + 25 * _b3(c) / 24,
            ),
            (
                "U1_1_-1",
                1,
                "U(1,1,-1) = -B_(p-3) / 2",
                lambda c: c.U(1, 1, -1),
                lambda c: -_b3(c) / 2,
            ),
            (
                "U1_-1_1",
                1,
                "U(1,-1,1) = B_(p-3) / 2",
                lambda c: c.U(1, -1, 1),
                lambda c: _b3(c) / 2,
            ),
            (
                "U-1_1_1",
                1,
                "U(-1,1,1) = -q^3/3 - 7/24 B_(p-3)",
                lambda c: c.U(-1, 1, 1),
                lambda c: -(c.q**3) / 3 - 7 * _b3(c) / 24,
            ),
            (
                "U-4",
                1,
                "U(-4) = H(-1,1,1,1)",
                lambda c: c.U(-4),
                lambda c: c.H(-1, 1, 1, 1),
            ),
            (
                "U-4-rev",
                1,
                "U(-4) = -H(1,1,1,-1)",
                lambda c: c.U(-4),
                lambda c: -c.H(1, 1, 1, -1),
            ),
            (
                "U1_-3",
                1,
                "U(1,-3) = A - B + 5/4 q B_(p-3)",
                lambda c: c.U(1, -3),
                lambda c: _ab(c) + 5 * _qb(c) / 4,
            ),
            (
                "U-3_1",
                1,
                "U(-3,1) = H(1,1,1,-1) + B - A - 5/4 q B_(p-3)",
                lambda c: c.U(-3, 1),
                lambda c: c.H(1, 1, 1, -1) - _ab(c) - 5 * _qb(c) / 4,
            ),
        ),
    )


def _reversal_side(ctx: PrimeContext, s: Composition, family: str) -> Residue:
    """
    (-1)^w [F(rev s) + sum_j p |s_j| F(rev (s (+) e_j))], F the other family
    """
    value = getattr(ctx, family)
    total = value(*s.reverse())
    for j, part in enumerate(s):
        total += ctx.pk(1, abs(part) * value(*increment_part(s, j).reverse()))
    return total if s.weight() % 2 == 0 else -total


def _u_v_reversal(s: Composition) -> Iterator[CongruenceCheck]:
    negatives = sum(1 for part in s if part < 0)
    yield congruence(
        "C23",
        "U",
        statement="U(s) = 2^(p n) (-1)^w [V(rev s) + sum_j p |s_j| V(rev(s (+) e_j))] mod p^2",
        lhs=lambda ctx: ctx.U(*s),
        rhs=lambda ctx: ctx.two(ctx.p * negatives) * _reversal_side(ctx, s, "V"),
        power=2,
        min_prime=s.weight() + 2,
        s=tuple(s),
    )
    yield congruence(
        "C23",
        "V",
        statement="V(s) = 2^(-p n) (-1)^w [U(rev s) + sum_j p |s_j| U(rev(s (+) e_j))] mod p^2",
        lhs=lambda ctx: ctx.V(*s),
        rhs=lambda ctx: ctx.two(-ctx.p * negatives) * _reversal_side(ctx, s, "U"),
        power=2,
        min_prime=s.weight() + 2,
        s=tuple(s),
    )


@registry("C23")
def u_v_reversal(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for s in signed_compositions(min(options.weight_cap, 5)):
        yield from _u_v_reversal(s)
    yield congruence(
        "C23",
        "V-1",
        statement="V(-1) = -2^(-p) (U(-1) + p U(-2) + p^2 U(-3)) mod p^3",
        lhs=lambda c: c.V(-1),
        rhs=lambda c: -c.two(-c.p) * (c.U(-1) + c.pk(1, c.U(-2)) + c.pk(2, c.U(-3))),
        power=3,
    )


_BINOMIAL_POINTS = (Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(5, 3))
_BINOMIAL_DEPTHS = range(1, 5)


def _harmonic_prefixes(ctx: PrimeContext) -> Tuple[List[int], List[int]]:
    """H(1; j) and H(1,1; j) modulo p^k for j = 0..p-1"""
    m = ctx.mode.modulus
    inv = inverse_powers(1, ctx.p - 1, m)
    h1, h11 = [0], [0]
    for j in range(1, ctx.p):
        h11.append((h11[-1] + h1[-1] * inv[j]) % m)
        h1.append((h1[-1] + inv[j]) % m)
    return h1, h11


def _binomial_expansion(ctx: PrimeContext) -> List[int]:
    """1 - p H(1; j) + p^2 H(1,1; j) for j = 0..p-1"""
    m, p = ctx.mode.modulus, ctx.p
    h1, h11 = _harmonic_prefixes(ctx)
    return [(1 - p * a + p * p * b) % m for a, b in zip(h1, h11)]


def _expanded_sum(ctx: PrimeContext, x: Fraction, d: int) -> Residue:
    """sum_j x^j / j^d (1 - p H(1;j) + p^2 H(1,1;j))"""
    inv = inverse_powers(d, ctx.p - 1, ctx.mode.modulus)
    expansion = _binomial_expansion(ctx)
    total = ctx.r(0)
    power = ctx.r(1)
    step = ctx.r(x)
    for j in range(1, ctx.p):
        power *= step
        total += power * (inv[j] * expansion[j])
    return total


def _binomial_lemmas(x: Fraction, d: int) -> Iterator[CongruenceCheck]:
    def full_range(side: Callable[..., Residue]) -> Formula:
        return lambda c: side(x, d, c.p - 1, c.mode)

    yield congruence(
        "C24",
        "general",
        statement="weak sum ((1-x)^(n_1) - 1) / (n_1...n_d) = sum_j (-x)^j C(p-1,j) / j^d",
        lhs=full_range(weak_shifted_sum),
        rhs=full_range(signed_binomial_sum),
        power=3,
        d=d,
        x=x,
    )
    yield congruence(
        "C24",
        "general-expanded",
        statement="weak sum ((1-x)^(n_1) - 1) / (n_1...n_d)"
        " = sum_j x^j / j^d (1 - p H(1;j) + p^2 H(1,1;j)) mod p^3",
        lhs=full_range(weak_shifted_sum),
        rhs=lambda c: _expanded_sum(c, x, d),
        power=3,
        d=d,
        x=x,
    )
    yield congruence(
        "C24",
        "binomial-u",
        statement="weak sum (-1)^(n_d) (1-x)^(n_1) C(p-1,n_d) / (n_1...n_d)"
        " = sum_k (x^k - 1) / k^d",
        lhs=full_range(binomial_u_sum),
        rhs=full_range(power_difference),
        power=3,
        d=d,
        x=x,
    )


def _signed_choose(ctx: PrimeContext) -> Tuple[Residue, ...]:
    return tuple(ctx.r((-1) ** j * comb(ctx.p - 1, j)) for j in range(ctx.p))


def _choose_expansion(ctx: PrimeContext) -> Tuple[Residue, ...]:
    return tuple(ctx.r(v) for v in _binomial_expansion(ctx))


@registry("C24")
def binomial_lemmas(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for d in _BINOMIAL_DEPTHS:
        for x in _BINOMIAL_POINTS:
            yield from _binomial_lemmas(x, d)
    yield congruence(
        "C24",
        "choose",
        statement="(-1)^j C(p-1,j) = 1 - p H(1;j) + p^2 H(1,1;j) mod p^3, j = 0..p-1",
        lhs=_signed_choose,
        rhs=_choose_expansion,
        power=3,
    )


def _sign_increment(s: int) -> int:
    return s + (1 if s > 0 else -1)


def _pair_reversal(a: int, b: int) -> CongruenceCheck:
    sigma = (-1) ** (abs(a) + abs(b)) * (1 if a * b > 0 else -1)

    def rhs(ctx: PrimeContext) -> Residue:
        H = ctx.H
        correction = abs(b) * H(_sign_increment(b), a) + abs(a) * H(b, _sign_increment(a))
        return sigma * (H(b, a) + ctx.pk(1, correction))

    return congruence(
        "C25",
        statement="H(a,b) = sigma [H(b,a) + p|b| H(b (+) 1, a) + p|a| H(b, a (+) 1)] mod p^2",
        lhs=lambda ctx: ctx.H(a, b),
        rhs=rhs,
        power=2,
        min_prime=abs(a) + abs(b) + 2,
        s=(a, b),
    )


@registry("C25")
def pair_reversal(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for s in signed_compositions(min(options.weight_cap, 5), min_weight=2):
        if len(s) == 2:
            yield _pair_reversal(*s)


@registry("C26")
def weight_two_three(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    def h_minus_ones_cubed(c: PrimeContext) -> Residue:
        q = c.q
        return (
            2 * q**2
            + c.pk(1, 2 * c.X(3) - 2 * q**3)
            + c.pk(2, Fraction(11, 6) * q**4 + _qb(c) / 2)
        )

    yield from _entries(
        "C26",
        (
            (
                "H-1_-1.p3",
                3,
                "H(-1,-1) = 2q^2 + p(2X - 2q^3) + p^2(11/6 q^4 + q B_(p-3) / 2) mod p^3",
                lambda c: c.H(-1, -1),
                h_minus_ones_cubed,
            ),
            (
                "H-1_-1",
                2,
                "H(-1,-1) = 2q^2 - 2p q^3 - p B_(p-3) / 3 mod p^2",
                lambda c: c.H(-1, -1),
                lambda c: 2 * c.q**2 - c.pk(1, 2 * c.q**3 + _b3(c) / 3),
            ),
            (
                "H1_-1",
                2,
                "H(1,-1) = q^2 - p q^3 - 13/24 p B_(p-3) mod p^2",
                lambda c: c.H(1, -1),
                lambda c: c.q**2 - c.pk(1, c.q**3 + 13 * _b3(c) / 24),
            ),
            (
                "H-1_1",
                2,
                "H(-1,1) = -q^2 + p q^3 + p B_(p-3) / 24 mod p^2",
                lambda c: c.H(-1, 1),
                lambda c: -(c.q**2) + c.pk(1, c.q**3 + _b3(c) / 24),
            ),
            ("H-3", 2, "H(-3) = 3X mod p^2", lambda c: c.H(-3), lambda c: 3 * c.X(3)),
            (
                "H-2_1",
                2,
                "H(-2,1) = -3/2 X mod p^2",
                lambda c: c.H(-2, 1),
                lambda c: -3 * c.X(3) / 2,
            ),
            (
                "H1_-2",
                2,
                "H(1,-2) = -3/2 X mod p^2",
                lambda c: c.H(1, -2),
                lambda c: -3 * c.X(3) / 2,
            ),
            (
                "H2_-1",
                2,
                "H(2,-1) = -3/2 X - 7/6 p q B_(p-3) + p(B - A) mod p^2",
                lambda c: c.H(2, -1),
                lambda c: -3 * c.X(3) / 2 - c.pk(1, 7 * _qb(c) / 6) - c.pk(1, _ab(c)),
            ),
            (
                "H-1_2",
                2,
                "H(-1,2) = -3/2 X - p q B_(p-3) / 6 + p(A - B) mod p^2",
                lambda c: c.H(-1, 2),
                lambda c: -3 * c.X(3) / 2 - c.pk(1, _qb(c) / 6) + c.pk(1, _ab(c)),
            ),
        ),
    )


@registry("C27")
def fourth_power(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C27",
        (
            (
                "U-1",
                4,
                "U(-1) = -2q + 7/2 p^2 X + p^3 H(-3,1) / 2 mod p^4",
                lambda c: c.U(-1),
                lambda c: -2 * c.q + c.pk(2, 7 * c.X(3) / 2) + c.pk(3, c.H(-3, 1) / 2),
            ),
            (
                "H1",
                4,
                "H(1) = 2 p^2 X mod p^4",
                lambda c: c.H(1),
                lambda c: c.pk(2, 2 * c.X(3)),
            ),
            (
                "H2",
                3,
                "H(2) = -4 p X mod p^3",
                lambda c: c.H(2),
                lambda c: c.pk(1, -4 * c.X(3)),
            ),
            (
                "H2-half",
                3,
                "H(2; (p-1)/2) = -14 p X mod p^3",
                lambda c: c.Hh(2),
                lambda c: c.pk(1, -14 * c.X(3)),
            ),
            (
                "U-1-H1",
                4,
                "U(-1) - H(1) = -p H(-2) + p^2 H(1,-2) - p^3 H(1,1,-2) - 2q mod p^4",
                lambda c: c.U(-1) - c.H(1),
                lambda c: (
                    c.pk(1, -c.H(-2)) + c.pk(2, c.H(1, -2)) - c.pk(3, c.H(1, 1, -2)) - 2 * c.q
                ),
            ),
        ),
    )


@registry("C28")
def alternating_weight_three(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C28",
        (
            (
                "H-1_-2",
                2,
                "H(-1,-2) = 9/2 X - 5/6 p q B_(p-3) + p h31 / 4 mod p^2",
                lambda c: c.H(-1, -2),
                lambda c: 9 * c.X(3) / 2 + c.pk(1, -5 * _qb(c) / 6 + c.h31 / 4),
            ),
            (
                "H-2_-1",
                2,
                "H(-2,-1) = -9/2 X - p q B_(p-3) / 6 - p h31 / 4 mod p^2",
                lambda c: c.H(-2, -1),
                lambda c: -9 * c.X(3) / 2 - c.pk(1, _qb(c) / 6 + c.h31 / 4),
            ),
        ),
    )


@registry("C29")
def depth_three_weight_three(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    def x(c: PrimeContext) -> Residue:
        return c.X(3)

    def pab(c: PrimeContext, scale: Fraction) -> Residue:
        return c.pk(1, scale * _ab(c))

    yield from _entries(
        "C29",
        (
            (
                "H-1_-1_-1",
                2,
                "H(-1,-1,-1) = -4/3 q^3 + X + p(2q^4 + 2/3 q B_(p-3)) mod p^2",
                lambda c: c.H(-1, -1, -1),
                lambda c: (
                    Fraction(-4, 3) * c.q**3 + x(c) + c.pk(1, 2 * c.q**4 + 2 * _qb(c) / 3)
                ),
            ),
            (
                "H-1_1_-1",
                2,
                "H(-1,1,-1) = p(q B_(p-3) - (A - B)) / 2 mod p^2",
                lambda c: c.H(-1, 1, -1),
                lambda c: c.pk(1, _qb(c) / 2) - pab(c, Fraction(1, 2)),
            ),
            (
                "H1_-1_-1",
                2,
                "H(1,-1,-1) = -q^3 + 21/4 X + p(3/2 q^4 + 3/8 q B_(p-3) + (A-B)/4)"
                " + p h31 / 8 mod p^2",
                lambda c: c.H(1, -1, -1),
                lambda c: (
                    -(c.q**3)
                    + 21 * x(c) / 4
                    + c.pk(1, 3 * c.q**4 / 2 + 3 * _qb(c) / 8 + c.h31 / 8)
                    + pab(c, Fraction(1, 4))
                ),
            ),
            (
                "H-1_-1_1",
                2,
                "H(-1,-1,1) = q^3 - 21/4 X + p(-3/2 q^4 + q B_(p-3)/8 + (A-B)/4)"
                " - p h31 / 8 mod p^2",
                lambda c: c.H(-1, -1, 1),
                lambda c: (
                    c.q**3
                    - 21 * x(c) / 4
                    + c.pk(1, -3 * c.q**4 / 2 + _qb(c) / 8 - c.h31 / 8)
                    + pab(c, Fraction(1, 4))
                ),
            ),
            (
                "H1_-1_1",
                2,
                "H(1,-1,1) = -2H(1,1,-1) + 3X + p(7/6 q B_(p-3) + (A-B)) mod p^2",
                lambda c: c.H(1, -1, 1),
                lambda c: (
                    -2 * c.H(1, 1, -1) + 3 * x(c) + c.pk(1, 7 * _qb(c) / 6) + pab(c, Fraction(1))
                ),
            ),
            (
                "H-1_1_1",
                2,
                "H(-1,1,1) = H(1,1,-1) - p(q B_(p-3) / 2 + (A-B)) mod p^2",
                lambda c: c.H(-1, 1, 1),
                lambda c: c.H(1, 1, -1) - c.pk(1, _qb(c) / 2) - pab(c, Fraction(1)),
            ),
        ),
    )


@registry("C33")
def h11_1_in_u(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield congruence(
        "C33",
        "H1_1_-1",
        statement="H(1,1,-1) = U(-3) - p(U(-4) + 7/12 q B_(p-3) + A - B) mod p^2",
        lhs=lambda c: c.H(1, 1, -1),
        rhs=lambda c: (
            c.U(-3) - c.pk(1, c.U(-4) + 7 * _qb(c) / 12) - c.pk(1, _ab(c))
        ),
        power=2,
    )


def _s111(c: PrimeContext) -> Residue:
    return c.S(-1, 1, 1)


@registry("C34")
def expansion_steps(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C34",
        (
            (
                "tau.x-1",
                3,
                "U(-1) - H(1) = -p H(-2) + p^2 H(1,-2) - 2q mod p^3",
                lambda c: c.U(-1) - c.H(1),
                lambda c: c.pk(1, -c.H(-2)) + c.pk(2, c.H(1, -2)) - 2 * c.q,
            ),
            (
                "tau.x2",
                3,
                "U(-1) + 2^p H(1) = p^2 U(-3) + p^2 U(-2,1) - 2q mod p^3",
                lambda c: c.U(-1) + c.two(c.p) * c.H(1),
                lambda c: c.pk(2, c.U(-3) + c.U(-2, 1)) - 2 * c.q,
            ),
            (
                "tau.xhalf",
                3,
                "V(-1) - H(1) = -p V(-2) + p^2 V(1,-2) + q / 2^(p-1) mod p^3",
                lambda c: c.V(-1) - c.H(1),
                lambda c: c.pk(1, -c.V(-2)) + c.pk(2, c.V(1, -2)) + c.q * c.two(1 - c.p),
            ),
            (
                "two.x-1",
                3,
                "H(-1) - H(1) = -p U(-2) + p^2 U(1,-2) - 2q mod p^3",
                lambda c: c.H(-1) - c.H(1),
                lambda c: c.pk(1, -c.U(-2)) + c.pk(2, c.U(1, -2)) - 2 * c.q,
            ),
            (
                "three.x-1",
                3,
                "H(-1) - H(1) = U(-1) - p(U(-2) + U(1,-1)) + p^2(U(1,-2) + U(1,1,-1)) mod p^3",
                lambda c: c.H(-1) - c.H(1),
                lambda c: (
                    c.U(-1)
                    - c.pk(1, c.U(-2) + c.U(1, -1))
                    + c.pk(2, c.U(1, -2) + c.U(1, 1, -1))
                ),
            ),
            (
                "square",
                3,
                "H(-1)^2 = 2H(-1,-1) + H(2) mod p^3",
                lambda c: c.H(-1) ** 2,
                lambda c: 2 * c.H(-1, -1) + c.H(2),
            ),
            (
                "three.xhalf",
                2,
                "U(-1,1) + U(-2) = H(1,1) + H(2) + H(-2) - p H(1,-2) - p H(-3) mod p^2",
                lambda c: c.U(-1, 1) + c.U(-2),
                lambda c: (
                    c.H(1, 1) + c.H(2) + c.H(-2) - c.pk(1, c.H(1, -2) + c.H(-3))
                ),
            ),
            (
                "three.xhalf.value",
                2,
                "U(-1,1) + U(-2) = 13/12 p B_(p-3) mod p^2",
                lambda c: c.U(-1, 1) + c.U(-2),
                lambda c: c.pk(1, 13 * _b3(c) / 12),
            ),
            (
                "H1_-1",
                2,
                "H(1,-1) = q^2 - 2/3 p q^3 - p B_(p-3) / 4 + p H(1,1,-1) mod p^2",
                lambda c: c.H(1, -1),
                lambda c: (
                    c.q**2 + c.pk(1, -2 * c.q**3 / 3 - _b3(c) / 4 + c.H(1, 1, -1))
                ),
            ),
            (
                "H-1_-2.sum",
                2,
                "H(-1,-2) + H(-2,-1) = -p q B_(p-3) mod p^2",
                lambda c: c.H(-1, -2) + c.H(-2, -1),
                lambda c: c.pk(1, -_qb(c)),
            ),
            (
                "tauS",
                2,
                "S(-1,1,1) + p(U(-4) + H(-1,2,1) + H(-2,1,1) + H(-3,1) - H(1) S(-1,1,1))"
                " = U(-3) - H(1) mod p^2",
                lambda c: _s111(c)
                + c.pk(
                    1,
                    c.U(-4) + c.H(-1, 2, 1) + c.H(-2, 1, 1) + c.H(-3, 1) - c.H(1) * _s111(c),
                ),
                lambda c: c.U(-3) - c.H(1),
            ),
            (
                "S-1_1_1",
                2,
                "S(-1,1,1) - S(1,1,1) = U(-3) - p U(-4) - p U(1,-3) mod p^2",
                lambda c: _s111(c) - c.S(1, 1, 1),
                lambda c: c.U(-3) - c.pk(1, c.U(-4) + c.U(1, -3)),
            ),
            (
                "U-sum",
                1,
                "U(-1,1,1) + U(-1,2) + U(-2,1) = H(-3) + S(1,1,1) - U(-3)",
                lambda c: c.U(-1, 1, 1) + c.U(-1, 2) + c.U(-2, 1),
                lambda c: c.H(-3) + c.S(1, 1, 1) - c.U(-3),
            ),
            (
                "U-sum.value",
                1,
                "U(-1,1,1) + U(-1,2) + U(-2,1) = q^3/3 - 5/24 B_(p-3)",
                lambda c: c.U(-1, 1, 1) + c.U(-1, 2) + c.U(-2, 1),
                lambda c: c.q**3 / 3 - 5 * _b3(c) / 24,
            ),
            (
                "V-sum",
                1,
                "V(-1,1,1) + V(-2,1) + V(-1,2) = 0",
                lambda c: c.V(-1, 1, 1) + c.V(-2, 1) + c.V(-1, 2),
                lambda c: 0,
            ),
            (
                "U-sum-rev",
                1,
                "U(1,1,-1) + U(1,-2) + U(2,-1) = 0",
                lambda c: c.U(1, 1, -1) + c.U(1, -2) + c.U(2, -1),
                lambda c: 0,
            ),
        ),
    )
