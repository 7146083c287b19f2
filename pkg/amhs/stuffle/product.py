from typing import Optional

from ..evaluator import EvalMode
from ..evaluator.nested import EXACT
from .word_sum import WordLike, WordSum, as_word_sum


def stuffle_product(w1: WordLike, w2: WordLike) -> WordSum:
    """Quasi-shuffle product, bilinear in word sums"""
    return as_word_sum(w1) * as_word_sum(w2)


def homomorphism_check(
    w1: WordLike, w2: WordLike, n: int, mode: Optional[EvalMode] = None
) -> bool:
    """H(w1; n) H(w2; n) == evaluation of w1 * w2 at n"""
    mode = mode or EXACT
    left = as_word_sum(w1).evaluate(n, mode) * as_word_sum(w2).evaluate(n, mode)
    return left == stuffle_product(w1, w2).evaluate(n, mode)
