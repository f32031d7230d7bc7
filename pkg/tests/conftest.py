import pytest

from motzkinrow import enumerate_range


@pytest.fixture(scope="session")
def row():
    """Memoized access to the oracle enumeration of one range."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_range(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def row_through():
    """All oracle words of ranges 1..n, in row order."""
    cache = {}

    def get(n):
        if n not in cache:
            words = []
            for k in range(1, n + 1):
                words.extend(enumerate_range(k))
            cache[n] = words
        return cache[n]

    return get
