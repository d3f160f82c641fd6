import pytest

from koszulmin.poly import Context


@pytest.fixture(scope="session")
def ctx_cube() -> Context:
    return Context.from_source("x1^3", 1, 3)


@pytest.fixture(scope="session")
def ctx_xyz() -> Context:
    return Context.from_source("x1*x2*x3", 3, 3)


@pytest.fixture(scope="session")
def ctx_fermat() -> Context:
    return Context.from_source("x1^3 + x2^3", 2, 3)


@pytest.fixture(scope="session")
def ctx_quad() -> Context:
    return Context.from_source("x1^2 + x2^2", 2, 2)


@pytest.fixture(scope="session")
def ctx_quartic() -> Context:
    return Context.from_source("x1^4 + x2^4", 2, 4)
