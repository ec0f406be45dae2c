import functools

import pytest

from hansarg.fixtures import fixture, names
from hansarg.verify import random_trials

FIXTURE_NAMES = names()
TOTAL_FIXTURES = [n for n in FIXTURE_NAMES if n != "preorder"]


@functools.lru_cache(maxsize=None)
def random_instances(n: int = 200, seed: int = 2024):
    return tuple((label, hans) for _, hans, label in random_trials(n, seed))


@pytest.fixture(params=FIXTURE_NAMES)
def any_fixture(request):
    return request.param, fixture(request.param)
