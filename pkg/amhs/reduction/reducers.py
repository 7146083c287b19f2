from threading import RLock
from typing import Tuple

from cachetools import LRUCache, cached

from ..composition import Composition, CompositionLike
from ..evaluator import ResidueMode, SumFamily, inverses, letter_columns, nested_sum
from ..residue import Residue, reduce_mod
from .terms import (
    negative_head_coefficients,
    negative_head_leading,
    positive_head_coefficients,
    validate_head,
)


def _kernel(pairs, p: int) -> Tuple[int, ...]:
    """K(j) = sum c j^(-m) modulo p for j = 0..p-1, by Horner in 1/j"""
    top = max(m for _, m in pairs)
    coefficients = [0] * (top + 1)
    for c, m in pairs:
        coefficients[m] = (coefficients[m] + reduce_mod(c, p).value) % p
    kernel = [0]
    for x in inverses(p - 1, p)[1:]:
        total = 0
        for c in reversed(coefficients):
            total = (total * x + c) % p
        kernel.append(total)
    return tuple(kernel)


@cached(LRUCache(maxsize=512), lock=RLock())
def positive_kernel(a: int, p: int) -> Tuple[int, ...]:
    return _kernel(positive_head_coefficients(a, p), p)


@cached(LRUCache(maxsize=512), lock=RLock())
def negative_kernel(a: int, p: int) -> Tuple[int, ...]:
    """
    Whole first-index weight of the negative-head reduction, apart from the
    s_1 letter itself: lead (1 - (-1)^j) - (-1)^j sum d j^(-m)
    """
    lead = reduce_mod(negative_head_leading(a, p), p).value
    tail_sum = _kernel(negative_head_coefficients(a, p), p)
    kernel = [0]
    for j in range(1, p):
        if j % 2:
            kernel.append((2 * lead + tail_sum[j]) % p)
        else:
            kernel.append(-tail_sum[j] % p)
    return tuple(kernel)


def _fused(kernel: Tuple[int, ...], tail: Composition, p: int) -> Residue:
    mode = ResidueMode(p)
    columns = list(letter_columns(SumFamily.H, tail, p - 1, mode))
    columns[0] = tuple(x * y % p for x, y in zip(columns[0], kernel))
    return mode.finish(nested_sum(columns, mode))


def reduce_positive_head(a: int, tail: CompositionLike, p: int) -> Residue:
    """
    H(a, s) modulo p through

        -1/a H((a-1) (+) s_1, s') + sum_{k=1}^{p-1-a} C(p-a, k) B_k / (p-a) H((k+a-1) (+) s_1, s')

    All right-hand H terms share the letters s'; their first letters differ
    only by powers of 1/j, so they collapse into one kernel column.
    """
    tail = validate_head(a, tail, p)
    return _fused(positive_kernel(a, p), tail, p)


def reduce_negative_head(a: int, tail: CompositionLike, p: int) -> Residue:
    """
    H(-a, s) modulo p through

        L (H(s) - H(-s_1, s')) - sum_{k=0}^{p-2-a} C(p-1-a, k) E_k(0) / 2 H((k+a) (+) (-s_1), s')

    with L = (1 - 2^(p-a)) B_(p-a) / (p-a).
    """
    tail = validate_head(a, tail, p)
    return _fused(negative_kernel(a, p), tail, p)


def reduce_head(head: int, tail: CompositionLike, p: int) -> Residue:
    if head > 0:
        return reduce_positive_head(head, tail, p)
    return reduce_negative_head(-head, tail, p)
