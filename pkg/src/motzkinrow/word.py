"""Motzkin words: validation, canonical form, and outer-block structure.

A Motzkin word is a string over {'0', '(', ')'} whose brackets balance and
whose every prefix has at least as many '(' as ')'.  Canonical words carry
no leading zeros; the one-symbol word "0" is the single exception.

Positions are 1-based and counted from the RIGHT end of the word, exactly
like digit positions in an integer.  Any position past the left end reads
as a virtual zero, which is what lets words of different lengths line up
for comparison and overlay.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from . import config
from .errors import (
    AlphabetError,
    ArgumentError,
    EmptyError,
    LimitError,
    NotCanonicalError,
    PrefixViolationError,
    SpanError,
    UnbalancedError,
    ZeroWordError,
)

ALPHABET = "0()"

# '0' sorts below '(' which sorts below ')'.
_LEX = str.maketrans("0()", "abc")


class Symbol(IntEnum):
    """One alphabet symbol; the int value gives the total order 0 < ( < )."""

    ZERO = 0
    OPEN = 1
    CLOSE = 2

    @property
    def char(self) -> str:
        return ALPHABET[self]

    @classmethod
    def from_char(cls, ch: str) -> "Symbol":
        idx = ALPHABET.find(ch)
        if idx < 0:
            raise AlphabetError(f"character {ch!r} is not one of '0', '(', ')'")
        return cls(idx)


def _validate_structure(text: str) -> None:
    if not text:
        raise EmptyError("a Motzkin word has at least one symbol")
    if len(text) > config.max_word_length():
        raise LimitError(
            f"word length {len(text)} exceeds the configured maximum "
            f"{config.max_word_length()}"
        )
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PrefixViolationError(
                    f"prefix {text[: i + 1]!r} closes more brackets than it opens"
                )
        elif ch != "0":
            raise AlphabetError(f"character {ch!r} is not one of '0', '(', ')'")
    if depth != 0:
        raise UnbalancedError(
            f"{text!r} has {text.count('(')} '(' but {text.count(')')} ')'"
        )


@dataclass(frozen=True, slots=True)
class MotzkinWord:
    """A canonical Motzkin word (no leading zero, except the word "0")."""

    text: str

    def __post_init__(self):
        _validate_structure(self.text)
        if self.text[0] == "0" and self.text != "0":
            raise NotCanonicalError(
                f"{self.text!r} starts with a zero; parse() turns leading "
                "zeros into padding"
            )

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.text)

    @property
    def is_zero(self) -> bool:
        return self.text == "0"

    @property
    def sort_key(self):
        """Key realizing the row order: length first, then symbol order."""
        return (len(self.text), self.text.translate(_LEX))

    def symbol_at(self, k: int) -> Symbol:
        """Symbol in position k, counting 1-based from the right end."""
        if k < 1:
            raise ArgumentError(f"positions are numbered from 1, got {k}")
        if k > len(self.text):
            return Symbol.ZERO
        return Symbol.from_char(self.text[len(self.text) - k])

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __le__(self, other):
        return self.sort_key <= other.sort_key

    def __gt__(self, other):
        return self.sort_key > other.sort_key

    def __ge__(self, other):
        return self.sort_key >= other.sort_key


@dataclass(frozen=True, slots=True)
class PaddedWord:
    """A canonical word plus an explicit count of leading zeros.

    Padding never changes the word's identity or the positions of its
    symbols; it only matters when text is laid out column by column.
    """

    core: MotzkinWord
    left_padding: int

    def __post_init__(self):
        if self.left_padding < 0:
            raise ArgumentError("left_padding must be nonnegative")

    @property
    def text(self) -> str:
        return "0" * self.left_padding + self.core.text

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return self.left_padding + len(self.core)

    def symbol_at(self, k: int) -> Symbol:
        return self.core.symbol_at(k)


@dataclass(frozen=True, slots=True)
class BlockSpan:
    """Positions of one outer block's brackets; open_pos > close_pos."""

    open_pos: int
    close_pos: int

    def __post_init__(self):
        if not self.open_pos > self.close_pos >= 1:
            raise SpanError(
                f"span needs open_pos > close_pos >= 1, got "
                f"({self.open_pos}, {self.close_pos})"
            )

    def covers(self, pos: int) -> bool:
        return self.close_pos <= pos <= self.open_pos


def parse(text: str):
    """Validate text and return a MotzkinWord, or a PaddedWord when the
    text carries leading zeros (the word "0" itself stays canonical)."""
    if not isinstance(text, str):
        raise AlphabetError(f"expected a string, got {type(text).__name__}")
    _validate_structure(text)
    stripped = text.lstrip("0")
    if not stripped:
        core, padding = "0", len(text) - 1
    else:
        core, padding = stripped, len(text) - len(stripped)
    if padding == 0:
        return MotzkinWord(core)
    return PaddedWord(MotzkinWord(core), padding)


def as_word(value) -> MotzkinWord:
    """Coerce a str / MotzkinWord / PaddedWord to its canonical word."""
    if isinstance(value, MotzkinWord):
        return value
    if isinstance(value, PaddedWord):
        return value.core
    if isinstance(value, str):
        parsed = parse(value)
        return parsed.core if isinstance(parsed, PaddedWord) else parsed
    raise AlphabetError(f"cannot interpret {value!r} as a Motzkin word")


def symbol_at(w, k: int) -> Symbol:
    """Symbol of w in position k (1-based from the right; virtual zeros
    past the left end)."""
    if isinstance(w, (MotzkinWord, PaddedWord)):
        return w.symbol_at(k)
    return as_word(w).symbol_at(k)


def outer_blocks(w) -> list[BlockSpan]:
    """All maximal depth-0 bracket spans of w, left to right."""
    w = as_word(w)
    n = len(w)
    spans = []
    depth = 0
    open_pos = 0
    for i, ch in enumerate(w.text):
        if ch == "(":
            if depth == 0:
                open_pos = n - i
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                spans.append(BlockSpan(open_pos, n - i))
    return spans


def extended_block(w, b: BlockSpan) -> MotzkinWord:
    """The word obtained by zeroing everything of w outside the outer
    block b, then dropping the leading zeros (trailing ones stay)."""
    w = as_word(w)
    if b not in outer_blocks(w):
        raise SpanError(f"{b} is not an outer block of {w.text!r}")
    n = len(w)
    body = w.text[n - b.open_pos : n - b.close_pos + 1]
    return MotzkinWord(body + "0" * (b.close_pos - 1))


def decompose(w) -> list[MotzkinWord]:
    """Extended blocks of w in decreasing length (left-to-right blocks)."""
    w = as_word(w)
    blocks = outer_blocks(w)
    if not blocks:
        raise ZeroWordError(f"{w.text!r} has no brackets to decompose")
    return [extended_block(w, b) for b in blocks]


def depth_before(w, k: int) -> int:
    """Bracket depth accumulated strictly left of position k."""
    w = as_word(w)
    if k < 1:
        raise ArgumentError(f"positions are numbered from 1, got {k}")
    n = len(w)
    if k >= n:
        return 0
    depth = 0
    for ch in w.text[: n - k]:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
    return depth
