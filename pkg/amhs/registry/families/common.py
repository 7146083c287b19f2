from typing import Any, Iterator, Optional, Tuple

from ...composition import Composition, compositions_of_weight
from ..check import CongruenceCheck, Recipe
from ..check_id import CheckId


def congruence(
    family: str,
    *tags: str,
    statement: str,
    lhs: Recipe,
    rhs: Recipe,
    power: int = 1,
    min_prime: int = 7,
    max_prime: Optional[int] = None,
    primes: Optional[Tuple[int, ...]] = None,
    expect_delta: Optional[int] = None,
    **params: Any,
) -> CongruenceCheck:
    """Build a check whose id is packed from ``tags`` and ``params``"""
    return CongruenceCheck(
        id=CheckId.build(family, *tags, **params).pack(),
        family=family,
        statement=statement,
        params=tuple(params.values()),
        power=power,
        min_prime=max(7, min_prime),
        max_prime=max_prime,
        primes=primes,
        lhs=lhs,
        rhs=rhs,
        expect_delta=expect_delta,
    )


def signed_compositions(max_weight: int, min_weight: int = 1) -> Iterator[Composition]:
    for w in range(min_weight, max_weight + 1):
        yield from compositions_of_weight(w)


def positive_pairs(max_weight: int) -> Iterator[Tuple[int, int]]:
    for w in range(2, max_weight + 1):
        for a in range(1, w):
            yield a, w - a


def positive_triples(max_weight: int) -> Iterator[Tuple[int, int, int]]:
    for w in range(3, max_weight + 1):
        for a in range(1, w - 1):
            for b in range(1, w - a):
                yield a, b, w - a - b
