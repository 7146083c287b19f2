from fractions import Fraction
from typing import Any


class AMHSError(Exception):
    """Base class for every error raised by amhs"""


class NotPIntegral(AMHSError, ValueError):
    """
    A rational with negative p-adic valuation was reduced modulo a power of p.

    Inside the catalog this means an identity was applied outside of the
    prime range where it is valid.
    """

    def __init__(self, value: Fraction, p: int):
        self.value = value
        self.p = p
        super().__init__(f"{value} is not {p}-integral")


class IndexNotInvertible(AMHSError, ValueError):
    """Summation indices (or the V character 1/2) are not units modulo p"""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        super().__init__(f"Indices 1..{n} are not all invertible modulo {p}")


class ModulusMismatch(AMHSError, ValueError):
    def __init__(self, left: Any, right: Any):
        super().__init__(f"Residues {left!r} and {right!r} live in different rings")


class ParseError(AMHSError, ValueError):
    """Raised by the text codecs (compositions, check ids)"""
