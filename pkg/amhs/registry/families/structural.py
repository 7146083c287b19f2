"""
Structural identities run at every prime: reversal, the stuffle homomorphism,
exact rational identities and the depth-reduction theorems
"""

import random
from typing import Iterator, List, Tuple

from ...composition import Composition, compositions_of_weight, h_from_s, s_from_h
from ...reduction import reduce_negative_head, reduce_positive_head
from ...specialnum import alt_power_sum, alt_power_sum_direct, power_sum, power_sum_closed
from ...stuffle import WordSum, stuffle_product
from ..catalog import CatalogOptions, registry
from ..check import CongruenceCheck
from ..context import PrimeContext
from .common import congruence, signed_compositions

SAMPLES = 8

# reduction checks evaluate one full H per prime, kept to small primes
REDUCTION_MAX_PRIME = 199


def _sample(rng: random.Random, max_weight: int, count: int) -> List[Composition]:
    pool = list(signed_compositions(max_weight))
    return rng.sample(pool, min(count, len(pool)))


def _reversal(s: Composition, family: str) -> CongruenceCheck:
    negatives = sum(1 for part in s if part < 0)
    sign = -1 if (negatives + s.weight()) % 2 else 1
    return congruence(
        "C30",
        family,
        statement=f"{family}(s) = sign(prod s_j) (-1)^|s| {family}(rev s) mod p",
        lhs=lambda ctx: getattr(ctx, family)(*s),
        rhs=lambda ctx: sign * getattr(ctx, family)(*s.reverse()),
        min_prime=s.weight() + 2,
        s=tuple(s),
    )


@registry("C30")
def reversal(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    rng = random.Random(f"C30:{options.seed}")
    for s in _sample(rng, options.weight_cap, SAMPLES):
        yield _reversal(s, "H")
        yield _reversal(s, "S")


def _random_word(rng: random.Random, max_depth: int = 3, max_part: int = 3) -> Tuple[int, ...]:
    depth = rng.randint(1, max_depth)
    return tuple(rng.choice((1, -1)) * rng.randint(1, max_part) for _ in range(depth))


def _homomorphism(w1: Tuple[int, ...], w2: Tuple[int, ...]) -> CongruenceCheck:
    def lhs(ctx: PrimeContext):
        return ctx.H(*w1) * ctx.H(*w2)

    def rhs(ctx: PrimeContext):
        return stuffle_product(w1, w2).evaluate(ctx.p - 1, ctx.mode)

    weight = sum(abs(s) for s in w1 + w2)
    return congruence(
        "C31",
        statement="H(w1) H(w2) = H(w1 * w2), * the stuffle product",
        lhs=lhs,
        rhs=rhs,
        power=2,
        min_prime=weight + 2,
        u=w1,
        v=w2,
    )


@registry("C31")
def stuffle_homomorphism(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    rng = random.Random(f"C31:{options.seed}")
    seen = set()
    while len(seen) < SAMPLES:
        pair = _random_word(rng), _random_word(rng)
        if pair in seen:
            continue
        seen.add(pair)
        yield _homomorphism(*pair)


def _power_sums(d: int) -> Iterator[CongruenceCheck]:
    yield congruence(
        "C36",
        "power-sum",
        statement="sum_(j<p) j^d = Bernoulli closed form",
        lhs=lambda ctx: power_sum(ctx.p, d),
        rhs=lambda ctx: power_sum_closed(ctx.p, d),
        power=3,
        d=d,
    )
    yield congruence(
        "C36",
        "alt-power-sum",
        statement="sum_(i<p) (-1)^i i^d = Euler closed form",
        lhs=lambda ctx: alt_power_sum_direct(d, ctx.p),
        rhs=lambda ctx: alt_power_sum(d, ctx.p),
        power=3,
        d=d,
    )


def _inclusion_exclusion(c: Composition) -> Iterator[CongruenceCheck]:
    yield congruence(
        "C36",
        "S-from-H",
        statement="S(c) = sum of H over the coarsenings of c",
        lhs=lambda ctx: ctx.S(*c),
        rhs=lambda ctx: s_from_h(c, lambda r: ctx.H(*r)),
        power=2,
        min_prime=c.weight() + 2,
        s=tuple(c),
    )
    yield congruence(
        "C36",
        "H-from-S",
        statement="H(c) = signed sum of S over the coarsenings of c",
        lhs=lambda ctx: ctx.H(*c),
        rhs=lambda ctx: h_from_s(c, lambda r: ctx.S(*r)),
        power=2,
        min_prime=c.weight() + 2,
        s=tuple(c),
    )


@registry("C36")
def exact_identities(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for d in range(1, options.weight_cap + 1):
        yield from _power_sums(d)
    for w in range(2, min(options.weight_cap, 4) + 1):
        for c in compositions_of_weight(w):
            if len(c) > 1:
                yield from _inclusion_exclusion(c)
    yield congruence(
        "C36",
        "stuffle-unit",
        statement="1 * w = w for the empty word",
        lhs=lambda ctx: (WordSum.unit() * WordSum.word((1, -2))).evaluate(ctx.p - 1, ctx.mode),
        rhs=lambda ctx: ctx.H(1, -2),
        power=2,
    )


def _reduction(a: int, tail: Composition) -> Iterator[CongruenceCheck]:
    weight = a + tail.weight()
    yield congruence(
        "C37",
        "positive",
        statement="H(a, s) through the positive-head depth reduction",
        lhs=lambda ctx: ctx.H(a, *tail),
        rhs=lambda ctx: reduce_positive_head(a, tail, ctx.p),
        min_prime=weight + 1,
        max_prime=REDUCTION_MAX_PRIME,
        a=a,
        s=tuple(tail),
    )
    yield congruence(
        "C37",
        "negative",
        statement="H(-a, s) through the negative-head depth reduction",
        lhs=lambda ctx: ctx.H(-a, *tail),
        rhs=lambda ctx: reduce_negative_head(a, tail, ctx.p),
        min_prime=weight + 1,
        max_prime=REDUCTION_MAX_PRIME,
        a=a,
        s=tuple(tail),
    )


@registry("C37")
def depth_reduction(options: CatalogOptions) -> Iterator[CongruenceCheck]:
    for a in range(1, options.weight_cap):
        for tail in signed_compositions(options.weight_cap - a):
            yield from _reduction(a, tail)
