import pytest

from uqsl2.session import Tower


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running stretch checks")


@pytest.fixture(scope="session")
def tower2():
    return Tower(2)


@pytest.fixture(scope="session")
def tower3():
    return Tower(3)


@pytest.fixture(scope="session")
def tower4():
    return Tower(4)


@pytest.fixture(scope="session", params=[2, 3])
def tower23(request, tower2, tower3):
    return tower2 if request.param == 2 else tower3
