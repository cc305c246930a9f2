import random

import pytest

from tvb.bundle import build_pair, nonnegative_form


@pytest.fixture
def primal_pair(request):
    a = getattr(request, "param", (1, 2, 3, 4))
    return build_pair(a, "primal")


@pytest.fixture
def dual_pair(request):
    a = getattr(request, "param", (1, 2, 3, 4))
    return nonnegative_form(build_pair(a, "dual"))


@pytest.fixture
def rng():
    return random.Random(20240611)
