import itertools
from fractions import Fraction
from threading import RLock
from typing import Any, Optional, Sequence, Tuple, Union

from cachetools import LRUCache, cached

from ..composition import Composition, CompositionLike, as_composition
from ..residue import Residue
from .family import SumFamily
from .modes import Column, EvalMode, ExactMode, ResidueMode

Value = Union[Fraction, Residue]
FamilyLike = Union[SumFamily, str]

EXACT = ExactMode()


def nested_sum(
    columns: Sequence[Column], mode: Optional[EvalMode] = None, weak: bool = False
) -> Any:
    """
    sum over i_1 < ... < i_d (or <= when ``weak``) of prod_t columns[t][i_t]

    Columns are indexed 0..n with entry 0 unused; the first column carries the
    smallest index. One sweep over j = 1..n updates the partial sums of every
    prefix: strict sums update longest prefixes first, weak ones shortest first.
    Returns the raw value (Fraction or int modulo ``mode.modulus``).
    """
    mode = mode or EXACT
    depth = len(columns)
    if depth == 0:
        return mode.lift(1)
    n = len(columns[0]) - 1
    partial = [mode.lift(1)] + [mode.lift(0)] * depth
    order = range(1, depth + 1) if weak else range(depth, 0, -1)
    modulus = mode.modulus
    if modulus is None:
        for j in range(1, n + 1):
            for i in order:
                partial[i] += partial[i - 1] * columns[i - 1][j]
    else:
        for j in range(1, n + 1):
            for i in order:
                partial[i] = (partial[i] + partial[i - 1] * columns[i - 1][j]) % modulus
    return partial[depth]


def letter_columns(
    family: SumFamily, c: Composition, n: int, mode: EvalMode
) -> Tuple[Column, ...]:
    return tuple(mode.letter(family.base(s), abs(s), n) for s in c)


def _prepare(family: FamilyLike, c: CompositionLike, n: int, mode: Optional[EvalMode]):
    family = SumFamily(family)
    c = as_composition(c)
    mode = mode or EXACT
    if n < 0:
        raise ValueError(f"Upper limit must be nonnegative, got {n}")
    mode.check_range(n, needs_half=family is SumFamily.V and any(s < 0 for s in c))
    return family, c, mode


@cached(LRUCache(maxsize=65536), lock=RLock())
def _eval_residue(family: SumFamily, parts: Tuple[int, ...], n: int, p: int, k: int) -> int:
    mode = ResidueMode(p, k)
    c = Composition(parts)
    return nested_sum(letter_columns(family, c, n, mode), mode, family.weak)


def eval_sum(
    family: FamilyLike, c: CompositionLike, n: int, mode: Optional[EvalMode] = None
) -> Value:
    """
    H, S, U or V of composition ``c`` with upper limit ``n``

    Exact mode returns a Fraction, residue mode a Residue modulo p^k.
    Runs in O(n * depth) ring operations.

    :raises IndexNotInvertible: in residue mode when n >= p
    """
    family, c, mode = _prepare(family, c, n, mode)
    if isinstance(mode, ResidueMode):
        return mode.finish(_eval_residue(family, tuple(c), n, mode.p, mode.k))
    return mode.finish(nested_sum(letter_columns(family, c, n, mode), mode, family.weak))


def eval_naive(
    family: FamilyLike, c: CompositionLike, n: int, mode: Optional[EvalMode] = None
) -> Value:
    """Literal loop over every index tuple; correctness oracle for small n"""
    family, c, mode = _prepare(family, c, n, mode)
    columns = letter_columns(family, c, n, mode)
    if family.weak:
        tuples = itertools.combinations_with_replacement(range(1, n + 1), len(c))
    else:
        tuples = itertools.combinations(range(1, n + 1), len(c))
    modulus = mode.modulus
    total = mode.lift(0)
    for indices in tuples:
        term = mode.lift(1)
        for column, j in zip(columns, indices):
            term = term * column[j]
        total = total + term
        if modulus is not None:
            total %= modulus
    return mode.finish(total)


def half(p: int) -> int:
    return (p - 1) // 2


def h31(p: int, k: int = 2) -> Residue:
    """h_31 := H(3, 1; (p-1)/2) modulo p^k"""
    return eval_sum(SumFamily.H, (3, 1), half(p), ResidueMode(p, k))
