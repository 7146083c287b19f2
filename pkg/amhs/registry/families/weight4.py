"""
Weight-four alternating sums modulo p in terms of the Bernoulli convolution
constants, q_p and B_(p-3)
"""

from fractions import Fraction
from typing import Callable, Iterator, Tuple

from ...residue import Residue
from ..catalog import CatalogOptions, registry
from ..check import CongruenceCheck
from ..context import PrimeContext
from .common import congruence

Formula = Callable[[PrimeContext], Residue]
Entry = Tuple[str, str, Formula, Formula]


def _qb(ctx: PrimeContext) -> Residue:
    return ctx.q * ctx.B(ctx.p - 3)


def _hb(ctx: PrimeContext) -> Residue:
    return ctx.H(-2, 1, 1)


def _entries(code: str, entries: Tuple[Entry, ...], **kwargs) -> Iterator[CongruenceCheck]:
    for tag, statement, lhs, rhs in entries:
        yield congruence(code, tag, statement=statement, lhs=lhs, rhs=rhs, **kwargs)


@registry("C15")
def convolution_relations(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C15",
        (
            ("A", "A = -B_(p-3)", lambda c: c.conv.A, lambda c: -c.B(c.p - 3)),
            ("G", "G = 0", lambda c: c.conv.G, lambda c: 0),
            ("C", "C = B - 3/4 A", lambda c: c.conv.C, lambda c: c.conv.B - 3 * c.conv.A / 4),
            (
                "K",
                "K = -3B - J + 3A",
                lambda c: c.conv.K,
                lambda c: -3 * c.conv.B - c.conv.J + 3 * c.conv.A,
            ),
        ),
    )


def _power_two_convolution(ctx: PrimeContext) -> Residue:
    p = ctx.p
    return ctx.bernoulli_sum((2**k, (k, p - 3 - k)) for k in range(p - 2))


@registry("C16")
def depth_two_weight_four(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C16",
        (
            ("H1-3", "H(1,-3) = B - A", lambda c: c.H(1, -3), lambda c: c.conv.B - c.conv.A),
            (
                "H-22",
                "H(-2,2) = 2(B - A)",
                lambda c: c.H(-2, 2),
                lambda c: 2 * (c.conv.B - c.conv.A),
            ),
            (
                "H1-3-sum",
                "H(1,-3) = sum_(k=0)^(p-3) 2^k B_k B_(p-3-k)",
                lambda c: c.H(1, -3),
                _power_two_convolution,
            ),
            ("H-13", "H(-1,3) = -q B_(p-3) / 2", lambda c: c.H(-1, 3), lambda c: -_qb(c) / 2),
        ),
    )


@registry("C17")
def depth_three_weight_four(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C17",
        (
            (
                "H1-1-2",
                "2H(1,-1,-2) = H(1,-3) + J",
                lambda c: 2 * c.H(1, -1, -2),
                lambda c: c.H(1, -3) + c.conv.J,
            ),
            (
                "H1-2-1",
                "H(1,-2,-1) = H(1,-3) - 5/4 q B_(p-3)",
                lambda c: c.H(1, -2, -1),
                lambda c: c.H(1, -3) - 5 * _qb(c) / 4,
            ),
            (
                "H2-1-1",
                "H(2,-1,-1) = -H(1,-3) - J/2 + 3/4 q B_(p-3)",
                lambda c: c.H(2, -1, -1),
                lambda c: -c.H(1, -3) - c.conv.J / 2 + 3 * _qb(c) / 4,
            ),
        ),
    )


_ZEROS = ((4,), (-4,), (2, 2), (-2, -2), (1, 3), (1, -2, 1), (-1, -2, -1))

# H(parts) = hb * Hb + j * J + qb * qB_(p-3), with Hb = H(-2,1,1)
_WEIGHT_FOUR_TABLE = (
    ((1, -3), -2, 0, 0),
    ((2, -2), 4, 0, 0),
    ((1, -1, 2), 3, 0, 0),
    ((-1, -3), 0, 0, Fraction(1, 2)),
    ((3, -1), 0, 0, Fraction(1, 2)),
    ((1, -1, -2), -1, Fraction(1, 2), 0),
    ((-2, -1, -1), 2, 0, -1),
    ((-1, 2, 1), -1, 0, Fraction(5, 4)),
    ((-1, 1, 2), 2, 0, Fraction(-3, 4)),
    ((-2, 1, -1), 3, Fraction(-1, 2), Fraction(3, 4)),
    ((1, -2, -1), -2, 0, Fraction(-5, 4)),
    ((-1, 2, -1), -4, 1, Fraction(-5, 2)),
    ((2, -1, -1), 2, Fraction(-1, 2), Fraction(3, 4)),
)


def _tag(parts: Tuple[int, ...]) -> str:
    return "H" + "_".join(str(s) for s in parts)


def _table_entry(parts, hb, j, qb) -> CongruenceCheck:
    def rhs(ctx: PrimeContext) -> Residue:
        return hb * _hb(ctx) + j * ctx.conv.J + qb * _qb(ctx)

    return congruence(
        "C18",
        _tag(parts),
        statement=f"H{parts} = {hb} Hb + {j} J + {qb} q B_(p-3), Hb = H(-2,1,1)",
        lhs=lambda ctx: ctx.H(*parts),
        rhs=rhs,
    )


def _zero_entry(parts) -> CongruenceCheck:
    return congruence(
        "C18",
        _tag(parts),
        statement=f"H{parts} = 0",
        lhs=lambda ctx: ctx.H(*parts),
        rhs=lambda ctx: 0,
    )


@registry("C18")
def weight_four_table(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield congruence(
        "C18",
        "Hb",
        statement="2 H(-2,1,1) = A - B",
        lhs=lambda c: 2 * _hb(c),
        rhs=lambda c: c.conv.A - c.conv.B,
    )
    yield congruence(
        "C18",
        "H1_1_-2",
        statement="2 H(1,1,-2) = -H(-3,1)",
        lhs=lambda c: 2 * c.H(1, 1, -2),
        rhs=lambda c: -c.H(-3, 1),
    )
    for parts in _ZEROS:
        yield _zero_entry(parts)
    for parts, hb, j, qb in _WEIGHT_FOUR_TABLE:
        yield _table_entry(parts, hb, j, qb)


def _depth_four(ctx: PrimeContext, formula: str) -> Residue:
    q4, qb, j = ctx.q**4, _qb(ctx), ctx.conv.J
    if formula == "1-1-11":
        return -(ctx.H(1, -3) + j + q4) / 2
    if formula == "-1-111":
        return (6 * j + 7 * qb + 8 * q4) / 24
    if formula == "-11-11":
        return -(qb + 2 * q4) / 12
    return ctx.H(1, -3) / 2 + (7 * qb + 2 * q4) / 12


_DEPTH_FOUR = (
    ((1, -1, -1, 1), "1-1-11"),
    ((-1, -1, 1, 1), "-1-111"),
    ((1, 1, -1, -1), "-1-111"),
    ((-1, 1, -1, 1), "-11-11"),
    ((1, -1, 1, -1), "-11-11"),
    ((-1, 1, 1, -1), "-111-1"),
)


def _boundary(ctx: PrimeContext) -> Tuple[Residue, ...]:
    p, H = ctx.p, ctx.H
    return H(p - 1, 1), H(-(p - 2), -2), H(-1, -(p - 1)), H(2, p - 2), H(p - 2, 2)


def _boundary_values(ctx: PrimeContext) -> Tuple[Residue, ...]:
    return ctx.r(-1), ctx.r(0), -ctx.q, ctx.r(Fraction(1, 2)), ctx.r(Fraction(-1, 2))


def _still_true(k: int) -> Iterator[CongruenceCheck]:
    def b(ctx: PrimeContext) -> Residue:
        return ctx.B(ctx.p - 3 - k)

    def two(ctx: PrimeContext) -> Residue:
        return ctx.two(ctx.p - 3 - k) - 1

    yield from _entries(
        "C19",
        (
            (
                "Hk+2_1",
                "H(k+2,1) = -B_(p-3-k)",
                lambda c: c.H(k + 2, 1),
                lambda c: -b(c),
            ),
            (
                "H-k-1_-2",
                "H(-(k+1),-2) = (2^(p-3-k) - 1)(k+2) B_(p-3-k) / 2",
                lambda c: c.H(-(k + 1), -2),
                lambda c: two(c) * (k + 2) * b(c) / 2,
            ),
            (
                "H2_k+1",
                "H(2,k+1) = -(k+2) B_(p-3-k) / 2",
                lambda c: c.H(2, k + 1),
                lambda c: -(k + 2) * b(c) / 2,
            ),
            (
                "H-1_-k-2",
                "H(-1,-(k+2)) = (2^(p-3-k) - 1) B_(p-3-k)",
                lambda c: c.H(-1, -(k + 2)),
                lambda c: two(c) * b(c),
            ),
        ),
        min_prime=k + 5,
        k=k,
    )


@registry("C19")
def depth_four_alternating(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for parts, formula in _DEPTH_FOUR:
        yield congruence(
            "C19",
            _tag(parts),
            statement=f"H{parts} in H(1,-3), J, q B_(p-3) and q^4",
            lhs=lambda c, parts=parts: c.H(*parts),
            rhs=lambda c, formula=formula: _depth_four(c, formula),
        )
    for k in range(2, options.weight_cap + 1, 2):
        yield from _still_true(k)
    yield congruence(
        "C19",
        "boundary",
        statement="H(p-1,1), H(-(p-2),-2), H(-1,-(p-1)), H(2,p-2), H(p-2,2)"
        " = -1, 0, -q, 1/2, -1/2",
        lhs=_boundary,
        rhs=_boundary_values,
    )


@registry("C20")
def depth_four_stuffle(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C20",
        (
            (
                "H1_1_-1_1",
                "H(1,1,-1,1) = 2Hb + 3H(-1,1,1,1) + q B_(p-3) / 2",
                lambda c: c.H(1, 1, -1, 1),
                lambda c: 2 * _hb(c) + 3 * c.H(-1, 1, 1, 1) + _qb(c) / 2,
            ),
            (
                "H-1_-1_1_-1",
                "H(-1,-1,1,-1) = 6Hb + 3H(1,-1,-1,-1) - 4q B_(p-3) - 2q^4",
                lambda c: c.H(-1, -1, 1, -1),
                lambda c: 6 * _hb(c) + 3 * c.H(1, -1, -1, -1) - 4 * _qb(c) - 2 * c.q**4,
            ),
            (
                "H-1_-1_-1_-1",
                "H(-1,-1,-1,-1) = q B_(p-3) / 3 + 2q^4 / 3",
                lambda c: c.H(-1, -1, -1, -1),
                lambda c: _qb(c) / 3 + 2 * c.q**4 / 3,
            ),
        ),
    )


_WIEFERICH = {
    1093: (1023, 529, 670, 952),
    3511: (1618, 2160, 1620, 540),
}


def _quadruple(ctx: PrimeContext) -> Tuple[Residue, ...]:
    H = ctx.H
    return ctx.conv.J, H(-3, 1), H(-1, -1, -1, 1), H(1, 1, 1, -1)


@registry("C21")
def wieferich_values(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for p, values in _WIEFERICH.items():
        yield congruence(
            "C21",
            statement="[J, H(-3,1), H(-1,-1,-1,1), H(1,1,1,-1)] at a Wieferich prime",
            lhs=_quadruple,
            rhs=lambda ctx, values=values: tuple(ctx.r(v) for v in values),
            primes=(p,),
            p=p,
        )
        yield congruence(
            "C21",
            "wieferich",
            statement="q_p = 0",
            lhs=lambda ctx: ctx.q,
            rhs=lambda ctx: 0,
            primes=(p,),
            p=p,
        )


@registry("C35")
def cited_values(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    yield from _entries(
        "C35",
        (
            ("H-1_1", "H(-1,1) = -q^2", lambda c: c.H(-1, 1), lambda c: -c.q**2),
            (
                "H-1_-1_1",
                "H(-1,-1,1) = q^3 + 7/8 B_(p-3)",
                lambda c: c.H(-1, -1, 1),
                lambda c: c.q**3 + 7 * c.B(c.p - 3) / 8,
            ),
            (
                "H1_1_-1",
                "H(1,1,-1) = -q^3/3 - 7/24 B_(p-3)",
                lambda c: c.H(1, 1, -1),
                lambda c: -c.q**3 / 3 - 7 * c.B(c.p - 3) / 24,
            ),
        ),
    )
