"""Circularly indexed character table: the text medium that index pairs point into.

The table holds at most 512 characters so every position fits in 9 bits.
Indexing wraps around: the successor of the last character is the first one.
Duplicate characters are allowed and common; a search simply stops at the
first match.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path

from .errors import StegError

MAX_LENGTH = 512

# One-to-one folding of Latin A-Z only; everything else compares verbatim.
_ASCII_FOLD = str.maketrans(string.ascii_uppercase, string.ascii_lowercase)


class EmptyPangram(StegError):
    pass


class PangramTooLong(StegError):
    pass


class CharacterNotInPangram(StegError):
    pass


class SeedOutOfRange(StegError):
    pass


class OffsetOutOfRange(StegError):
    pass


class MatchMode(Enum):
    """How message characters are compared against table characters."""

    EXACT = "exact"
    CASE_INSENSITIVE = "fold"

    def fold(self, text: str) -> str:
        if self is MatchMode.EXACT:
            return text
        return text.translate(_ASCII_FOLD)


@dataclass(frozen=True)
class Pangram:
    """Immutable table of 1..512 Unicode scalar values, indexed circularly."""

    chars: str

    def __post_init__(self) -> None:
        if not self.chars:
            raise EmptyPangram("pangram must contain at least one character")
        if len(self.chars) > MAX_LENGTH:
            raise PangramTooLong(
                f"pangram has {len(self.chars)} characters; the maximum is {MAX_LENGTH}"
            )

    def __len__(self) -> int:
        return len(self.chars)

    @cached_property
    def folded(self) -> str:
        return self.chars.translate(_ASCII_FOLD)


def make_pangram(text: str) -> Pangram:
    """Build a table from ``text``, enforcing the 1..512 character bound."""
    return Pangram(text)


def strip_trailing_newline(text: str) -> str:
    """Drop one trailing LF or CRLF; every other character is significant."""
    if text.endswith("\r\n"):
        return text[:-2]
    if text.endswith("\n"):
        return text[:-1]
    return text


def load_pangram(path: str | Path) -> Pangram:
    """Read a pangram from a UTF-8 text file (one trailing line break ignored)."""
    return make_pangram(strip_trailing_newline(Path(path).read_text(encoding="utf-8")))


def coverage_gaps(p: Pangram, message: str, mode: MatchMode = MatchMode.EXACT) -> set[str]:
    """Message characters with no match anywhere in ``p``.

    An empty set means every character of the message can be encoded.
    """
    alphabet = set(mode.fold(p.chars))
    return {ch for ch in message if mode.fold(ch) not in alphabet}


def find_offset(p: Pangram, seed: int, ch: str, mode: MatchMode = MatchMode.EXACT) -> int:
    """Circular distance from ``seed`` to the first match of ``ch``.

    The search starts at the seed position itself, so a match right at the
    seed yields 0. The result is always in [0, len(p)).
    """
    if len(ch) != 1:
        raise ValueError(f"expected a single character, got {ch!r}")
    n = len(p)
    if not 0 <= seed < n:
        raise SeedOutOfRange(f"seed {seed} out of range for pangram length {n}")
    haystack = p.chars if mode is MatchMode.EXACT else p.folded
    needle = mode.fold(ch)
    i = haystack.find(needle, seed)
    if i < 0:
        i = haystack.find(needle, 0, seed)
        if i < 0:
            raise CharacterNotInPangram(f"character {ch!r} has no match in the pangram")
    return (i - seed) % n


def char_at(p: Pangram, seed: int, offset: int) -> str:
    """Table occupant at circular position ``seed + offset``."""
    n = len(p)
    if not 0 <= seed < n:
        raise SeedOutOfRange(f"seed {seed} out of range for pangram length {n}")
    if not 0 <= offset < n:
        raise OffsetOutOfRange(f"offset {offset} out of range for pangram length {n}")
    return p.chars[(seed + offset) % n]
