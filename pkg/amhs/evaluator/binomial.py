"""
Binomial sums around the weak nested kernel, for any upper limit m

Exact mode gives the rational values; residue mode at m = p - 1 is what the
congruence catalog evaluates.
"""

from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence

from .modes import Column, EvalMode
from .nested import EXACT, Value, nested_sum

ONE = Fraction(1)


def _product(mode: EvalMode, column: Column, weights: Sequence[int]) -> List:
    m = mode.modulus
    if m is None:
        return [a * w for a, w in zip(column, weights)]
    return [a * w % m for a, w in zip(column, weights)]


def _difference(mode: EvalMode, a: Column, b: Column) -> List:
    m = mode.modulus
    if m is None:
        return [x - y for x, y in zip(a, b)]
    return [(x - y) % m for x, y in zip(a, b)]


def _total(mode: EvalMode, column: Column) -> Value:
    total = sum(column[1:], mode.lift(0))
    m = mode.modulus
    return mode.finish(total if m is None else total % m)


def _signed_choose(m: int) -> List[int]:
    """(-1)^j C(m, j) for j = 0..m"""
    return [(-1) ** j * comb(m, j) for j in range(m + 1)]


def weak_shifted_sum(x: Fraction, d: int, m: int, mode: Optional[EvalMode] = None) -> Value:
    """sum over 1 <= n_1 <= ... <= n_d <= m of ((1-x)^(n_1) - 1) / (n_1 ... n_d)"""
    mode = mode or EXACT
    mode.check_range(m)
    x = Fraction(x)
    plain = mode.letter(ONE, 1, m)
    first = _difference(mode, mode.letter(1 - x, 1, m), plain)
    return mode.finish(nested_sum([first] + [plain] * (d - 1), mode, weak=True))


def signed_binomial_sum(x: Fraction, d: int, m: int, mode: Optional[EvalMode] = None) -> Value:
    """sum_j (-x)^j C(m, j) / j^d for j = 1..m"""
    mode = mode or EXACT
    mode.check_range(m)
    column = mode.letter(-Fraction(x), d, m)
    return _total(mode, _product(mode, column, [comb(m, j) for j in range(m + 1)]))


def binomial_u_sum(x: Fraction, d: int, m: int, mode: Optional[EvalMode] = None) -> Value:
    """sum over 1 <= n_1 <= ... <= n_d <= m of (-1)^(n_d) (1-x)^(n_1) C(m, n_d) / (n_1 ... n_d)"""
    mode = mode or EXACT
    mode.check_range(m)
    first = mode.letter(1 - Fraction(x), 1, m)
    signs = _signed_choose(m)
    if d == 1:
        columns = [_product(mode, first, signs)]
    else:
        plain = mode.letter(ONE, 1, m)
        columns = [first] + [plain] * (d - 2) + [_product(mode, plain, signs)]
    return mode.finish(nested_sum(columns, mode, weak=True))


def power_difference(x: Fraction, d: int, m: int, mode: Optional[EvalMode] = None) -> Value:
    """sum_k x^k / k^d - sum_k 1 / k^d for k = 1..m"""
    mode = mode or EXACT
    mode.check_range(m)
    return _total(
        mode, _difference(mode, mode.letter(Fraction(x), d, m), mode.letter(ONE, d, m))
    )
