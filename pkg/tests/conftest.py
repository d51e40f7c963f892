import pytest

from primesubseq import build_sieve


@pytest.fixture(scope="session")
def store_small():
    return build_sieve(10**4 + 10)


@pytest.fixture(scope="session")
def store_m():
    return build_sieve(10**6 + 100)


@pytest.fixture(scope="session")
def store_large():
    return build_sieve(10**7 + 100)
