import numpy as np
import pytest

from wlpcert import Weights, ZeroOneInstance, to_standard_form

EX1_TEXT = """\
# example instance 1
3 3
1 2 0
0 1 1
1 0 2
1 1 1
"""


@pytest.fixture
def ex1():
    return ZeroOneInstance(
        A=np.array([[1, 2, 0], [0, 1, 1], [1, 0, 2]], dtype=float),
        b=np.array([1.0, 1.0, 1.0]),
    )


@pytest.fixture
def ex2():
    return ZeroOneInstance(
        A=np.array([[1, 0, 0], [1, 1, 0], [0, 1, 1]], dtype=float),
        b=np.array([0.0, 1.5, 0.5]),
    )


@pytest.fixture
def ex3():
    return ZeroOneInstance(
        A=np.array([[1, 2, 0], [0, 1, 1], [2, 0, 1]], dtype=float),
        b=np.array([0.0, 0.5, 1.0 / 3.0]),
    )


@pytest.fixture
def ones3():
    return Weights(c=np.ones(3))


@pytest.fixture
def sf1(ex1):
    return to_standard_form(ex1)


@pytest.fixture
def sf2(ex2):
    return to_standard_form(ex2)


@pytest.fixture
def sf3(ex3):
    return to_standard_form(ex3)
