#!/usr/bin/env python3
"""A first walk along the row.

Canonical Motzkin words, sorted by length and then alphabetically under
0 < ( < ), line up like the natural numbers: every word gets an index,
every index is populated.  This script shows the order, the rank/unrank
bijection, and the neighbor operations.
"""

from motzkinrow import (
    compare,
    enumerate_range,
    motzkin,
    predecessor,
    range_max,
    range_min,
    rank,
    successor,
    unique_count,
    unrank,
)


def main():
    print("The first four ranges of the row:")
    index = 0
    for n in range(1, 5):
        words = enumerate_range(n)
        row = ", ".join(f"w_{index + i} = {w}" for i, w in enumerate(words))
        print(f"  length {n}: {row}")
        index += len(words)

    print()
    print("Each length-n range holds unique_count(n) words and spans the")
    print("index interval [motzkin(n-1), motzkin(n)):")
    for n in range(2, 8):
        lo, lo_i = range_min(n)
        hi, hi_i = range_max(n)
        print(f"  n={n}: {unique_count(n):4d} words, "
              f"{lo} at {lo_i} ... {hi} at {hi_i}")

    print()
    w = "()0(0())0"
    print(f"rank({w!r}) = {rank(w)}")
    print(f"unrank(736) = {unrank(736)}")
    print(f"unrank(782) = {unrank(782)}")

    print()
    print("Walking with successor/predecessor (note the range rollover):")
    cursor = unrank(18)
    for _ in range(6):
        print(f"  w_{rank(cursor)} = {cursor}")
        cursor = successor(cursor)
    print(f"  ... and back: predecessor({cursor}) = {predecessor(cursor)}")

    print()
    x, y = "(0)", "()0"
    order = {-1: "<", 0: "=", 1: ">"}[compare(x, y)]
    print(f"Order check: {x} {order} {y}, "
          f"ranks {rank(x)} vs {rank(y)}")
    print(f"Motzkin numbers drive it all: M_0..M_9 = "
          f"{[motzkin(n) for n in range(10)]}")


if __name__ == "__main__":
    main()
