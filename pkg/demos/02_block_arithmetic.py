#!/usr/bin/env python3
"""Adding and subtracting words through their outer blocks.

A word's outer blocks, padded with zeros, are row members in their own
right, and the word's index is exactly the sum of theirs.  That turns
right-aligned column overlay into a partial addition with a matching
subtraction, defined whenever the operands' blocks do not cross.
"""

from motzkinrow import (
    add,
    decompose,
    decompose_sum,
    noncrossing,
    rank,
    sub,
)


def column(label, text, width):
    print(f"  {label}{text.rjust(width)}")


def main():
    w = "()0(0())0"
    parts = decompose(w)
    print(f"w_{rank(w)} = {w} splits into extended blocks:")
    for p in parts:
        print(f"  {p}  (index {rank(p)})")

    print()
    print("The column addition behind the index equation "
          f"{rank(parts[0])} + {rank(parts[1])} = {rank(w)}:")
    width = len(w)
    column("  ", parts[0].text, width)
    column("+ ", parts[1].text, width)
    column("= ", w, width)

    print()
    x, y = "()0000(0)", "(0)0000"
    z = add(x, y)
    print(f"Filling a zero zone: {x} (index {rank(x)}) + {y} "
          f"(index {rank(y)}) = {z} (index {rank(z)})")
    print(f"  and both differences come back: {z} - {y} = {sub(z, y)}, "
          f"{z} - {x} = {sub(z, x)}")

    print()
    print("Sums regroup freely: the three blocks of", z)
    blocks, total = decompose_sum(z)
    for p in blocks:
        print(f"  {p}  index {rank(p)}")
    print(f"  index sum = {total} = rank({z})")

    print()
    a, b = "(00)", "()0"
    print(f"Crossing operands have no sum: noncrossing({a}, {b}) = "
          f"{noncrossing(a, b)}")
    print("  even symbol-disjoint overlays are rejected when a block would")
    print("  land inside another block, because the indexes stop adding up:")
    print(f"  overlaying {a} with right-aligned {b} gives (()), but "
          f"rank('(())') = {rank('(())')} while {rank(a)} + {rank(b)} = "
          f"{rank(a) + rank(b)}")


if __name__ == "__main__":
    main()
