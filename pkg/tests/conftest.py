"Shared fixtures for the test suite"
import os
import pytest

from goldbach_toolkit.config import CACHE_DIR_ENV, MEMORY_BUDGET_ENV
from goldbach_toolkit.sieve.primes import PrimeTable, sieve_primes


def pytest_collection_modifyitems(config, items):
    """Skip the paper-scale runs unless GOLDBACH_EXTENDED=1."""
    if os.environ.get("GOLDBACH_EXTENDED") == "1":
        return
    skip_extended = pytest.mark.skip(reason="set GOLDBACH_EXTENDED=1 to run paper-scale checks")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip_extended)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Every test starts without a prime cache or a custom memory budget."""
    monkeypatch.delenv(CACHE_DIR_ENV, raising=False)
    monkeypatch.delenv(MEMORY_BUDGET_ENV, raising=False)


@pytest.fixture(scope="session")
def small_table() -> PrimeTable:
    return sieve_primes(10_000)


@pytest.fixture(scope="session")
def million_table() -> PrimeTable:
    # a little headroom so shifted subsets up to 10^6 can be built
    return sieve_primes(1_000_100)


@pytest.fixture(scope="session")
def large_table() -> PrimeTable:
    return sieve_primes(20_000_100)
