import logging
from typing import Callable, Dict, Iterable, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .check import CongruenceCheck

logger = logging.getLogger(__name__)


class CatalogOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    weight_cap: int = Field(6, ge=2, le=8)
    seed: int = 0


FamilyBuilder = Callable[[CatalogOptions], Iterable[CongruenceCheck]]


class CheckRegistry:
    """
    Family code -> builder of that family's checks

    Builders are registered with the instance used as a decorator::

        @registry("C04")
        def depth_two(options): ...
    """

    def __init__(self):
        self._builders: Dict[str, FamilyBuilder] = {}

    def get(self, code: str) -> FamilyBuilder:
        if code not in self._builders:
            raise ValueError(f"Family {code} not found")
        return self._builders[code]

    def add(self, builder: FamilyBuilder, code: Optional[str] = None):
        code = code or builder.__name__
        if code in self._builders:
            raise ValueError(f"Family {code} is already registered")
        self._builders[code] = builder

    def __call__(self, code: Optional[str] = None):
        def wrapper(builder: FamilyBuilder):
            self.add(builder, code)
            return builder

        return wrapper

    @property
    def codes(self) -> List[str]:
        return sorted(self._builders)

    def build(self, options: CatalogOptions) -> List[CongruenceCheck]:
        checks: List[CongruenceCheck] = []
        seen = set()
        for code in self.codes:
            for check in self._builders[code](options):
                if check.id in seen:
                    raise ValueError(f"Duplicate check id {check.id!r}")
                if check.family != code:
                    raise ValueError(f"Check {check.id!r} registered under family {code}")
                seen.add(check.id)
                checks.append(check)
        logger.debug("Catalog built: %d checks over %d families", len(checks), len(self.codes))
        return checks


registry = CheckRegistry()


def catalog(weight_cap: int = 6, seed: int = 0) -> List[CongruenceCheck]:
    """
    Every congruence family instantiated up to ``weight_cap``

    Families are concatenated in code order and keep their own internal
    order, so the list is deterministic for a given (weight_cap, seed).
    """
    from . import families  # noqa: F401  (registers the builders)

    return registry.build(CatalogOptions(weight_cap=weight_cap, seed=seed))
