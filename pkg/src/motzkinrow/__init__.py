"""motzkinrow: the totally ordered row of Motzkin words.

Canonical Motzkin words (balanced brackets with zeros, no leading zero)
are ordered by length and then alphabetically under 0 < ( < ), which
indexes them like natural numbers.  This package provides exact
rank/unrank on that order, partial addition and subtraction of words
through their outer blocks, bracket-motion operations whose index jumps
are closed-form polynomials in Motzkin numbers, and a brute-force
verification harness for all of it.
"""

from .bigcomb import completions, motzkin, unique_count
from .blockops import add, decompose_sum, includes, noncrossing, sub
from .errors import (
    AlphabetError,
    ArgumentError,
    BlockedError,
    CrossingError,
    EmptyError,
    InclusionError,
    LimitError,
    MotzkinError,
    NotCanonicalError,
    PolynomialMismatchError,
    PrefixViolationError,
    SiteError,
    SpanError,
    UnbalancedError,
    UnderflowError,
    UnknownCheckError,
    UnknownSequenceError,
    ValidityError,
    WordError,
    ZeroWordError,
)
from .nav import (
    DeltaReport,
    control_points,
    insert_pair,
    merge_adjacent,
    psi,
    remove_pair,
    shift_close,
    shift_open,
    split_block,
    swap_across_zero,
    xi,
    zeta,
)
from .rowindex import (
    compare,
    predecessor,
    range_max,
    range_min,
    rank,
    successor,
    unrank,
)
from .verify import (
    AuditReport,
    Counterexample,
    audit,
    enumerate_range,
    regenerate_addendum,
    report_lines,
    report_text,
    sequence,
)
from .word import (
    BlockSpan,
    MotzkinWord,
    PaddedWord,
    Symbol,
    as_word,
    decompose,
    extended_block,
    outer_blocks,
    parse,
    symbol_at,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "ArgumentError",
    "AuditReport",
    "BlockSpan",
    "BlockedError",
    "Counterexample",
    "CrossingError",
    "DeltaReport",
    "EmptyError",
    "InclusionError",
    "LimitError",
    "MotzkinError",
    "MotzkinWord",
    "NotCanonicalError",
    "PaddedWord",
    "PolynomialMismatchError",
    "PrefixViolationError",
    "SiteError",
    "SpanError",
    "Symbol",
    "UnbalancedError",
    "UnderflowError",
    "UnknownCheckError",
    "UnknownSequenceError",
    "ValidityError",
    "WordError",
    "ZeroWordError",
    "add",
    "as_word",
    "audit",
    "compare",
    "completions",
    "control_points",
    "decompose",
    "decompose_sum",
    "enumerate_range",
    "extended_block",
    "includes",
    "insert_pair",
    "merge_adjacent",
    "motzkin",
    "noncrossing",
    "outer_blocks",
    "parse",
    "predecessor",
    "psi",
    "range_max",
    "range_min",
    "rank",
    "regenerate_addendum",
    "remove_pair",
    "report_lines",
    "report_text",
    "sequence",
    "shift_close",
    "shift_open",
    "split_block",
    "sub",
    "successor",
    "swap_across_zero",
    "symbol_at",
    "unique_count",
    "unrank",
    "xi",
    "zeta",
]
