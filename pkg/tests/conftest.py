import pytest

from primexp.families import d1, d2, q1, q2, standard_cycle
from primexp.verification import Runner


@pytest.fixture
def cycle10():
    return standard_cycle(10)


@pytest.fixture
def q1_10_3():
    return q1(10, 3)


@pytest.fixture
def q2_10_3():
    return q2(10, 3)


@pytest.fixture
def d1_4():
    return d1(4)


@pytest.fixture
def d2_4():
    return d2(4)


@pytest.fixture
def runner():
    with Runner(jobs=2, block_size=64) as r:
        yield r
