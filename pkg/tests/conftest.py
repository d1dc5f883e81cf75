import pytest

from polyak import build_presentation, build_table


@pytest.fixture(scope="session")
def pres4():
    return build_presentation(4)


@pytest.fixture(scope="session")
def pres5():
    return build_presentation(5)


@pytest.fixture(scope="session")
def table4():
    return build_table(4)


@pytest.fixture(scope="session")
def table5():
    return build_table(5)


@pytest.fixture(scope="session")
def table6():
    return build_table(6)
