from enum import Enum
from fractions import Fraction


class SumFamily(str, Enum):
    """
    The four nested-sum families

    Index k under part s contributes base(s)^k / k^|s|, with base 1 for
    positive parts and, for negative parts, -1 (H, S), 2 (U) or 1/2 (V).
    S uses weakly increasing indices, the others strictly increasing ones.
    """

    H = "H"
    S = "S"
    U = "U"
    V = "V"

    @property
    def weak(self) -> bool:
        return self is SumFamily.S

    def base(self, part: int) -> Fraction:
        if part > 0:
            return Fraction(1)
        return _NEGATIVE_BASE[self]


_NEGATIVE_BASE = {
    SumFamily.H: Fraction(-1),
    SumFamily.S: Fraction(-1),
    SumFamily.U: Fraction(2),
    SumFamily.V: Fraction(1, 2),
}
