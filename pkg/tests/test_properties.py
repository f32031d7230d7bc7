"""Property tests over randomly drawn row members."""

from hypothesis import given, settings
from hypothesis import strategies as st

from motzkinrow import (
    add,
    compare,
    motzkin,
    noncrossing,
    parse,
    predecessor,
    rank,
    sub,
    successor,
    unrank,
)

indexes = st.integers(min_value=0, max_value=motzkin(25) - 1)
small_indexes = st.integers(min_value=0, max_value=motzkin(12) - 1)


@given(indexes)
def test_rank_unrank_round_trip(i):
    assert rank(unrank(i)) == i


@given(st.integers(min_value=1, max_value=motzkin(15) - 1))
def test_neighbors_invert(i):
    w = unrank(i)
    assert predecessor(successor(w)) == w
    assert successor(predecessor(w)) == w


@given(indexes, st.integers(min_value=0, max_value=6))
def test_parse_format_round_trip(i, padding):
    w = unrank(i)
    text = "0" * padding + w.text
    parsed = parse(text)
    assert parsed.text == text
    assert (parsed if padding == 0 else parsed.core) == w


@given(indexes, indexes)
def test_compare_tracks_rank(i, j):
    x, y = unrank(i), unrank(j)
    assert compare(x, y) == (i > j) - (i < j)


@settings(max_examples=300)
@given(small_indexes, small_indexes)
def test_addition_is_symmetric_and_invertible(i, j):
    x, y = unrank(i), unrank(j)
    if not noncrossing(x, y):
        return
    z = add(x, y)
    assert rank(z) == i + j
    assert add(y, x) == z
    assert sub(z, x) == y
    assert sub(z, y) == x
