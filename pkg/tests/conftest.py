import pytest

from amhs.evaluator import EXACT, ResidueMode

SMALL_PRIMES = (7, 11, 13, 17, 19, 23)


@pytest.fixture
def exact():
    return EXACT


@pytest.fixture(params=SMALL_PRIMES)
def prime(request) -> int:
    return request.param


@pytest.fixture
def mod7() -> ResidueMode:
    return ResidueMode(7)
