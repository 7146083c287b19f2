from collections import Counter
from fractions import Fraction
from numbers import Rational
from threading import RLock
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from cachetools import LRUCache, cached

from ..composition import Word, oplus
from ..evaluator import EvalMode, SumFamily, Value, eval_sum
from ..evaluator.nested import EXACT
from ..residue import RationalLike


@cached(LRUCache(maxsize=8192), lock=RLock())
def _stuffle_words(left: Word, right: Word) -> Tuple[Tuple[Word, int], ...]:
    # y_s w1 * y_t w2 = y_s (w1 * y_t w2) + y_t (y_s w1 * w2) + y_(s+t) (w1 * w2)
    if not left:
        return ((right, 1),)
    if not right:
        return ((left, 1),)
    s, rest_left = left[0], left[1:]
    t, rest_right = right[0], right[1:]
    acc: Counter = Counter()
    for word, count in _stuffle_words(rest_left, right):
        acc[(s,) + word] += count
    for word, count in _stuffle_words(left, rest_right):
        acc[(t,) + word] += count
    for word, count in _stuffle_words(rest_left, rest_right):
        acc[(oplus(s, t),) + word] += count
    return tuple(acc.items())


class WordSum:
    """
    Finite rational linear combination of words y_(s1) ... y_(sd)

    The empty word is the unit. ``+`` and ``-`` add combinations, ``*`` with a
    number scales and ``*`` between word sums is the stuffle product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Iterable[int], RationalLike]] = None):
        collected: Dict[Word, Fraction] = {}
        for word, coefficient in (terms or {}).items():
            word = tuple(int(s) for s in word)
            if 0 in word:
                raise ValueError(f"Letters must be nonzero, got {word}")
            collected[word] = collected.get(word, Fraction(0)) + Fraction(coefficient)
        self._terms = {word: c for word, c in collected.items() if c}

    @classmethod
    def word(cls, parts: Iterable[int] = (), coefficient: RationalLike = 1) -> "WordSum":
        return cls({tuple(parts): coefficient})

    @classmethod
    def unit(cls) -> "WordSum":
        return cls.word(())

    @property
    def terms(self) -> Dict[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        """Terms sorted lexicographically by word"""
        return iter(sorted(self._terms.items()))

    def coefficient(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "WordSum") -> "WordSum":
        if not isinstance(other, WordSum):
            return NotImplemented
        merged = dict(self._terms)
        for word, c in other._terms.items():
            merged[word] = merged.get(word, Fraction(0)) + c
        return WordSum(merged)

    def __neg__(self) -> "WordSum":
        return WordSum({word: -c for word, c in self._terms.items()})

    def __sub__(self, other: "WordSum") -> "WordSum":
        if not isinstance(other, WordSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["WordSum", Rational]) -> "WordSum":
        if isinstance(other, Rational):
            return WordSum({word: c * other for word, c in self._terms.items()})
        if not isinstance(other, WordSum):
            return NotImplemented
        product: Dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                for word, count in _stuffle_words(w1, w2):
                    product[word] = product.get(word, Fraction(0)) + c1 * c2 * count
        return WordSum(product)

    def __rmul__(self, other: Rational) -> "WordSum":
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordSum):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, n: int, mode: Optional[EvalMode] = None) -> Value:
        """Linear extension of w -> H(w; n); the empty word evaluates to 1"""
        mode = mode or EXACT
        total = mode.finish(mode.lift(0))
        for word, c in self.items():
            value = eval_sum(SumFamily.H, word, n, mode) if word else mode.finish(mode.lift(1))
            total = total + value * c
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}·({','.join(map(str, word))})" for word, c in self.items())

    def __repr__(self) -> str:
        return f"WordSum({self})"


WordLike = Union[WordSum, Iterable[int]]


def as_word_sum(value: WordLike) -> WordSum:
    if isinstance(value, WordSum):
        return value
    return WordSum.word(value)
