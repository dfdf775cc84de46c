import pytest

from kquadric import QuadricGraph


@pytest.fixture(scope="session")
def q1():
    return QuadricGraph(1)


@pytest.fixture(scope="session")
def q2():
    return QuadricGraph(2)


@pytest.fixture(scope="session")
def q3():
    return QuadricGraph(3)
