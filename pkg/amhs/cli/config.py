import logging
import re
from pathlib import Path
from typing import Iterator, Optional, Tuple

import gmpy2
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import ParseError
from ..registry import SuitePrefix

MIN_PRIME = 7

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")
_SUITE = re.compile(r"^C\d{2}(\.[^.]+)*$")


def parse_prime_range(text: str) -> Tuple[int, int]:
    """
    ``"LO..HI"`` or a single ``"P"``

    :raises ParseError: when the text is not of that form
    """
    match = _RANGE.match(text)
    if match is None:
        raise ParseError(f"Prime range must look like LO..HI, got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    return lo, hi


class SweepConfig(BaseModel):
    """Everything ``amhs verify`` is configured with; there are no config files"""

    model_config = ConfigDict(frozen=True)

    prime_lo: int
    prime_hi: int
    suites: Tuple[str, ...] = (SuitePrefix.ALL,)
    power_override: Optional[int] = Field(None, ge=1, le=6)
    jobs: int = Field(1, ge=1)
    seed: int = 0
    weight_cap: int = Field(6, ge=2, le=8)
    out: Optional[Path] = None
    log_level: str = "WARNING"
    no_timing: bool = False

    @field_validator("prime_lo")
    @classmethod
    def _check_prime_lo(cls, value: int) -> int:
        if value < MIN_PRIME or not gmpy2.is_prime(value):
            raise ValueError(f"prime_lo must be a prime >= {MIN_PRIME}, got {value}")
        return value

    @field_validator("suites", mode="before")
    @classmethod
    def _check_suites(cls, suites) -> Tuple[str, ...]:
        suites = tuple(suites)
        if not suites:
            raise ValueError("At least one suite is required")
        for suite in suites:
            if suite != SuitePrefix.ALL and not _SUITE.match(suite):
                raise ValueError(f"Suite must be 'all' or an id prefix like C08, got {suite!r}")
        return suites

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        value = value.upper()
        if not isinstance(logging.getLevelName(value), int):
            raise ValueError(f"Unknown log level {value!r}")
        return value

    @model_validator(mode="after")
    def _check_range(self) -> "SweepConfig":
        if self.prime_lo > self.prime_hi:
            raise ValueError(f"Empty prime range {self.prime_lo}..{self.prime_hi}")
        return self

    def primes(self) -> Iterator[int]:
        p = self.prime_lo
        while p <= self.prime_hi:
            yield p
            p = int(gmpy2.next_prime(p))

    def selects(self, check_id: str) -> bool:
        return any(SuitePrefix(suite)(check_id) for suite in self.suites)
