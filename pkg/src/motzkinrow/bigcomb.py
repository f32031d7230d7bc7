"""Exact Motzkin numbers and bracket-completion counts.

Everything here is plain Python integer arithmetic, so values stay exact at
any size.  Both tables grow on demand and are kept for the life of the
process; growth happens under a lock so concurrent readers never observe a
half-built row.
"""

import threading

from .errors import ArgumentError

_lock = threading.RLock()

# _motzkin[n] is the number of Motzkin words of length n (with leading
# zeros allowed), seeded with the 0- and 1-length values.
_motzkin = [1, 1]

# _completions[m][d] counts the length-m strings over {0, (, )} that start
# at bracket depth d, never dip below depth 0, and end at depth 0.  Row m
# has m + 1 entries; deeper starts cannot come back down in time.
_completions = [[1]]


def motzkin(n):
    """Return the n-th Motzkin number.

    Computed by the division-free convolution recurrence
    M[n+1] = M[n] + sum(M[k] * M[n-1-k] for k in 0..n-1).
    """
    if n < 0:
        raise ArgumentError(f"Motzkin numbers are indexed from 0, got {n}")
    if n >= len(_motzkin):
        with _lock:
            while len(_motzkin) <= n:
                m = len(_motzkin) - 1
                nxt = _motzkin[m] + sum(
                    _motzkin[k] * _motzkin[m - 1 - k] for k in range(m)
                )
                _motzkin.append(nxt)
    return _motzkin[n]


def unique_count(n):
    """Number of canonical (no leading zero) Motzkin words of length n.

    Every longer word is either inherited (a shorter word behind extra
    zeros) or new, so the count is the difference of consecutive Motzkin
    numbers.  The single word "0" makes the n = 1 count 1.
    """
    if n < 1:
        raise ArgumentError(f"ranges are numbered from 1, got {n}")
    if n == 1:
        return 1
    return motzkin(n) - motzkin(n - 1)


def completions(m, d):
    """Count the ways to finish a word: length-m suffixes from depth d.

    A suffix is admissible when the running depth never drops below zero
    and lands exactly on zero at the end.  ``completions(n, 0)`` equals
    ``motzkin(n)``.
    """
    if m < 0 or d < 0:
        raise ArgumentError(f"completions needs m, d >= 0, got ({m}, {d})")
    if d > m:
        return 0
    if m >= len(_completions):
        with _lock:
            while len(_completions) <= m:
                prev = _completions[-1]

                def at(i):
                    return prev[i] if 0 <= i < len(prev) else 0

                row = [at(i) + at(i + 1) + (at(i - 1) if i > 0 else 0)
                       for i in range(len(_completions) + 1)]
                _completions.append(row)
    return _completions[m][d]
