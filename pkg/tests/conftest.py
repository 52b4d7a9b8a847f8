import pytest

from quasiloop import fixtures


@pytest.fixture(scope="session")
def qt2():
    return fixtures.qt2()


@pytest.fixture(scope="session")
def qg1():
    return fixtures.qg1()


@pytest.fixture(scope="session")
def qd2():
    return fixtures.qd2()


@pytest.fixture(scope="session")
def qy1():
    return fixtures.qy1()
