import pytest

from semirep.corpus import instance


@pytest.fixture(scope="session")
def inst_a():
    return instance("A")


@pytest.fixture(scope="session")
def inst_b():
    return instance("B")


@pytest.fixture(scope="session")
def inst_c():
    return instance("C")


@pytest.fixture(scope="session")
def inst_d():
    return instance("D")


@pytest.fixture(scope="session")
def inst_e():
    return instance("E")
