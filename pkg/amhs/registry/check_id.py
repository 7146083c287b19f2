from fractions import Fraction
from typing import Any, ClassVar, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import ParseError

T = TypeVar("T", bound="CheckId")

PART_SEPARATOR = "_"


def encode_param(name: str, value: Any) -> str:
    """
    Render one id parameter: ``a2``, ``s1_-2_-1``, ``xhalf``, ``x-1``

    Compositions are joined with ``_``; the rational 1/2 is spelled ``half``.
    """
    if isinstance(value, bool):
        raise ValueError(f"Parameter {name}={value!r} can not be packed to a check id")
    if isinstance(value, int):
        return f"{name}{value}"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return f"{name}{value.numerator}"
        if value == Fraction(1, 2):
            return f"{name}half"
        return f"{name}{value.numerator}over{value.denominator}"
    if isinstance(value, tuple):
        return name + PART_SEPARATOR.join(str(int(s)) for s in value)
    raise ValueError(
        f"Parameter {name}={value!r} of type {type(value).__name__!r}"
        f" can not be packed to a check id"
    )


class CheckId(BaseModel):
    """
    Stable identifier of a catalog entry

    Packed form is the family code followed by tags and parameters, joined by
    :code:`.`: ``C04.a2.b3``, ``C08.known-fail.p7``, ``C30.H.s1_-2``.
    """

    model_config = ConfigDict(frozen=True)

    __separator__: ClassVar[str] = "."

    family: str = Field(pattern=r"^C\d{2}$")
    parts: Tuple[str, ...] = ()

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[str, ...]) -> Tuple[str, ...]:
        for part in parts:
            if not part:
                raise ValueError("Check id parts must be non-empty")
            if cls.__separator__ in part:
                raise ValueError(
                    f"Separator symbol {cls.__separator__!r} can not be used in part {part!r}"
                )
        return parts

    @classmethod
    def build(cls: Type[T], family: str, *tags: str, **params: Any) -> T:
        """Tags first, then keyword parameters in call order"""
        parts = tuple(tags) + tuple(encode_param(k, v) for k, v in params.items())
        return cls(family=family, parts=parts)

    def pack(self) -> str:
        return self.__separator__.join((self.family,) + self.parts)

    @classmethod
    def unpack(cls: Type[T], value: str) -> T:
        """
        Parse a packed id

        :param value: text such as ``C04.a2.b3``
        :return: instance of CheckId
        """
        if not isinstance(value, str):
            raise TypeError("value should be str")
        family, *parts = value.split(cls.__separator__)
        try:
            return cls(family=family, parts=tuple(parts))
        except ValueError as e:
            raise ParseError(f"Malformed check id {value!r}") from e

    def __str__(self) -> str:
        return self.pack()


class SuitePrefix(str):
    """
    Selector for ``--suite``

    ``SuitePrefix("C08")`` matches ``C08`` and every id below it on a dot
    boundary; ``all`` matches everything.
    """

    ALL = "all"

    def matches(self, check_id: str) -> bool:
        if self == self.ALL:
            return True
        return check_id == self or check_id.startswith(self + CheckId.__separator__)

    __call__ = matches
