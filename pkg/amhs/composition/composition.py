from typing import Callable, Iterable, Iterator, List, Sequence, Tuple, Type, TypeVar, Union

from ..errors import ParseError

T = TypeVar("T", bound="Composition")
V = TypeVar("V")

Word = Tuple[int, ...]


def sign(s: int) -> int:
    """Sign with sign(0) = +1, so that 0 (+) s = s"""
    return -1 if s < 0 else 1


def oplus(s: int, t: int) -> int:
    """s (+) t = sign(st) (|s| + |t|)"""
    return sign(s) * sign(t) * (abs(s) + abs(t))


class Composition(tuple):
    """
    Nonempty sequence of nonzero signed exponents (s_1, ..., s_d)

    |s_i| is the exponent of the i-th summation index and sign(s_i) picks its
    character. Text form is comma separated: ``"1,-2,-1"``.
    """

    __separator__ = ","

    def __new__(cls: Type[T], parts: Iterable[int]) -> T:
        parts = tuple(int(s) for s in parts)
        if not parts:
            raise ValueError("Composition must have at least one part")
        if 0 in parts:
            raise ValueError(f"Composition parts must be nonzero, got {parts}")
        return super().__new__(cls, parts)

    def depth(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(abs(s) for s in self)

    def sign_product(self) -> int:
        result = 1
        for s in self:
            result *= sign(s)
        return result

    def reverse(self) -> "Composition":
        return Composition(reversed(self))

    def head(self) -> int:
        return self[0]

    def tail(self) -> Word:
        return tuple(self[1:])

    def pack(self, sep: str = __separator__) -> str:
        return sep.join(str(s) for s in self)

    @classmethod
    def parse(cls: Type[T], text: str, sep: str = __separator__) -> T:
        """
        Parse ``"s1,s2,...,sd"``; whitespace around parts is tolerated

        :raises ParseError: on empty input, non-integers or zero parts
        """
        if not isinstance(text, str):
            raise TypeError("text should be str")
        chunks = [chunk.strip() for chunk in text.split(sep)]
        if not text.strip() or any(not chunk for chunk in chunks):
            raise ParseError(f"Bad composition {text!r}")
        try:
            parts = [int(chunk) for chunk in chunks]
        except ValueError:
            raise ParseError(f"Composition parts must be integers: {text!r}") from None
        if 0 in parts:
            raise ParseError(f"Composition parts must be nonzero: {text!r}")
        return cls(parts)

    def __repr__(self) -> str:
        return f"Composition({self.pack()})"

    def __str__(self) -> str:
        return f"({self.pack()})"


CompositionLike = Union[Composition, Sequence[int], str]


def as_composition(value: CompositionLike) -> Composition:
    if isinstance(value, Composition):
        return value
    if isinstance(value, str):
        return Composition.parse(value)
    return Composition(value)


def parse_word(text: str, sep: str = Composition.__separator__) -> Word:
    """Like :meth:`Composition.parse` but the empty string is the empty word"""
    if not text.strip():
        return ()
    return tuple(Composition.parse(text, sep))


def reverse(c: CompositionLike) -> Composition:
    return as_composition(c).reverse()


def coarsenings(c: CompositionLike) -> List[Composition]:
    """
    Every composition obtained by (+)-merging a subset of adjacent boundaries

    Index 0 of the result is ``c`` itself; there are 2^(d-1) entries.
    """
    c = as_composition(c)
    boundaries = len(c) - 1
    result = []
    for mask in range(1 << boundaries):
        parts = [c[0]]
        for i in range(boundaries):
            if mask >> i & 1:
                parts[-1] = oplus(parts[-1], c[i + 1])
            else:
                parts.append(c[i + 1])
        result.append(Composition(parts))
    return result


def s_from_h(c: CompositionLike, values: Callable[[Composition], V]) -> V:
    """S(c) as the plain sum of H over all coarsenings of c"""
    terms = iter(coarsenings(c))
    total = values(next(terms))
    for r in terms:
        total = total + values(r)
    return total


def h_from_s(c: CompositionLike, values: Callable[[Composition], V]) -> V:
    """H(c) = sum over coarsenings r of (-1)^(depth(c) - depth(r)) S(r)"""
    c = as_composition(c)
    terms = iter(coarsenings(c))
    total = values(next(terms))
    for r in terms:
        term = values(r)
        total = total - term if (len(c) - len(r)) % 2 else total + term
    return total


def increment_part(c: CompositionLike, j: int) -> Composition:
    """c (+) e_j: |s_j| grows by one and sign(s_j) is kept"""
    c = as_composition(c)
    parts = list(c)
    parts[j] += sign(parts[j])
    return Composition(parts)


def compositions_of_weight(weight: int, signed: bool = True) -> Iterator[Composition]:
    """All compositions of the given weight, every sign pattern when ``signed``"""

    def build(rest: int) -> Iterator[Word]:
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in build(rest - first):
                yield (first,) + tail
                if signed:
                    yield (-first,) + tail

    for parts in build(weight):
        yield Composition(parts)
