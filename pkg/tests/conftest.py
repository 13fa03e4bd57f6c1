import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from algspec.fields import QQ, PrimeField  # noqa: E402
from algspec.matrix import Mat  # noqa: E402


def rand_mat(field, n, rng, bound=3, m=None):
    m = n if m is None else m
    if field is QQ:
        return Mat(QQ, [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)])
    return Mat(field, [[rng.randrange(field.p) for _ in range(m)] for _ in range(n)])


def rand_invertible(field, n, rng, bound=3):
    from algspec.matrix import mat_inverse
    while True:
        a = rand_mat(field, n, rng, bound)
        if mat_inverse(a) is not None:
            return a


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def gf():
    return {p: PrimeField(p) for p in (2, 3, 5, 7, 11)}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
