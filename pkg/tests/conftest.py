"""Shared field fixtures, built once per session."""

import pytest

from dworkcount.field import FqField


@pytest.fixture(scope="session")
def f5():
    return FqField(5)


@pytest.fixture(scope="session")
def f7():
    return FqField(7)


@pytest.fixture(scope="session")
def f11():
    return FqField(11)


@pytest.fixture(scope="session")
def f13():
    return FqField(13)


@pytest.fixture(scope="session")
def f17():
    return FqField(17)


@pytest.fixture(scope="session")
def f19():
    return FqField(19)


@pytest.fixture(scope="session")
def f25():
    return FqField(5, 2)


@pytest.fixture(scope="session")
def f31():
    return FqField(31)


@pytest.fixture(scope="session")
def f7_alt():
    return FqField(7, alt_generator=True)


@pytest.fixture(scope="session")
def f13_alt():
    return FqField(13, alt_generator=True)
