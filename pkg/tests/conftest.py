import pytest

from almost_squares.oracle import brute_divisor_pair, brute_record_set

ORACLE_LIMIT = 200_000


@pytest.fixture(scope="session")
def record_set_small():
    return brute_record_set(5_000)


@pytest.fixture(scope="session")
def record_set_full():
    return brute_record_set(ORACLE_LIMIT)


@pytest.fixture(scope="session")
def small_divisor_table():
    """d(n) for every n up to the oracle cap, by descending trial division."""
    smalls = [0] * (ORACLE_LIMIT + 1)
    for n in range(1, ORACLE_LIMIT + 1):
        smalls[n] = brute_divisor_pair(n).small
    return smalls
