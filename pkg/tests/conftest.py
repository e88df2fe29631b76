import pytest

from pavingtools import catalog


@pytest.fixture(scope="session")
def ag32p():
    return catalog.get("ag32_prime").matroid


@pytest.fixture(scope="session")
def ag32():
    return catalog.get("ag32").matroid


@pytest.fixture(scope="session")
def k4():
    return catalog.get("k4").matroid


@pytest.fixture(scope="session")
def kelly_moser():
    return catalog.get("kelly_moser").matroid


@pytest.fixture(scope="session")
def hansen():
    return catalog.get("hansen").matroid


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_report = rep
