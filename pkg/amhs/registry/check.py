import logging
import time
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence, Tuple, Union

import gmpy2
from pydantic import BaseModel, ConfigDict, Field, field_serializer

from ..errors import AMHSError
from ..residue import Residue
from .context import PrimeContext

logger = logging.getLogger(__name__)

Side = Union[Residue, Fraction, int, Sequence[Residue]]
Recipe = Callable[[PrimeContext], Side]


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CongruenceCheck(BaseModel):
    """
    One instantiated congruence ``lhs == rhs (mod p^power)``

    ``lhs`` and ``rhs`` are recipes on a :class:`PrimeContext`. A side may be a
    tuple of residues, in which case the congruence holds coordinatewise.
    The check applies for ``min_prime <= p <= max_prime``; spot entries list
    their only primes in ``primes``. Entries with ``expect_delta`` reproduce a
    known counterexample: they pass when ``lhs - rhs`` equals that residue.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    id: str
    family: str
    statement: str
    params: Tuple[Any, ...] = ()
    power: int = Field(1, ge=1, le=6)
    min_prime: int = 7
    max_prime: Optional[int] = None
    primes: Optional[Tuple[int, ...]] = None
    lhs: Recipe
    rhs: Recipe
    expect_delta: Optional[int] = None

    @property
    def known_fail(self) -> bool:
        return self.expect_delta is not None

    def applies(self, p: int) -> bool:
        if self.primes is not None:
            return p in self.primes
        if p < self.min_prime:
            return False
        return self.max_prime is None or p <= self.max_prime


class CheckResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    id: str
    p: int
    k: int
    lhs: Optional[Residue] = None
    rhs: Optional[Residue] = None
    status: Status
    elapsed_us: int = 0
    diagnostic: Optional[str] = Field(None, exclude=True)

    @field_serializer("lhs", "rhs")
    def _residue_as_decimal(self, value: Optional[Residue]) -> Optional[str]:
        return None if value is None else str(value.value)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAIL


def effective_power(check: CongruenceCheck, power_override: Optional[int] = None) -> int:
    """An override can only lower the power a check is stated at"""
    if power_override is None:
        return check.power
    return min(check.power, power_override)


def _collapse(ctx: PrimeContext, lhs: Side, rhs: Side) -> Tuple[Residue, Residue, Optional[str]]:
    """
    Fold vector sides to one pair of residues

    On a mismatch the first differing coordinate is reported, otherwise the
    coordinate sums.
    """
    if not isinstance(lhs, (tuple, list)):
        return ctx.r(lhs), ctx.r(rhs), None
    if len(lhs) != len(rhs):
        raise ValueError(f"Vector sides differ in length: {len(lhs)} != {len(rhs)}")
    left = [ctx.r(x) for x in lhs]
    right = [ctx.r(x) for x in rhs]
    for i, (x, y) in enumerate(zip(left, right)):
        if x != y:
            return x, y, f"coordinate {i} differs"
    zero = ctx.r(0)
    return sum(left, zero), sum(right, zero), None


def run_check(
    check: CongruenceCheck, p: int, power_override: Optional[int] = None
) -> CheckResult:
    """
    Evaluate one check at one prime

    Errors from the arithmetic layer (a non p-integral constant, an index that
    is not a unit) turn into a failed result carrying a diagnostic.
    """
    if not gmpy2.is_prime(p):
        raise ValueError(f"Checks run at primes, got {p}")
    k = effective_power(check, power_override)
    if not check.applies(p):
        return CheckResult(id=check.id, p=p, k=k, status=Status.SKIPPED)

    started = time.perf_counter_ns()
    ctx = PrimeContext(p, k)
    try:
        lhs, rhs, diagnostic = _collapse(ctx, check.lhs(ctx), check.rhs(ctx))
    except AMHSError as e:
        elapsed = (time.perf_counter_ns() - started) // 1000
        logger.warning("%s at p=%d raised %s", check.id, p, e)
        return CheckResult(
            id=check.id, p=p, k=k, status=Status.FAIL, elapsed_us=elapsed, diagnostic=str(e)
        )
    elapsed = (time.perf_counter_ns() - started) // 1000

    if check.known_fail:
        passed = lhs - rhs == check.expect_delta
        if not passed:
            diagnostic = f"expected lhs - rhs = {check.expect_delta}, got {(lhs - rhs).value}"
    else:
        passed = lhs == rhs
    status = Status.PASS if passed else Status.FAIL
    if not passed:
        logger.warning("%s failed at p=%d: %s != %s %s", check.id, p, lhs, rhs, diagnostic or "")
    return CheckResult(
        id=check.id,
        p=p,
        k=k,
        lhs=lhs,
        rhs=rhs,
        status=status,
        elapsed_us=elapsed,
        diagnostic=diagnostic,
    )
