import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # make `oracles` importable

from liprime.primes import mobius_table, sieve  # noqa: E402


@pytest.fixture(scope="session")
def table_1e6():
    return sieve(10**6)


@pytest.fixture(scope="session")
def table_1e7():
    return sieve(10**7)


@pytest.fixture(scope="session")
def mob_1e4():
    return mobius_table(10**4)
