"""Finite words over at most two letters and their basic string operations.

A :class:`Word` is a ``str`` that has been checked to use at most two
distinct letters, so every function here also accepts plain strings.
Positions in the public contract (:meth:`Word.at`, :class:`Occurrence`)
are 1-based; Python slicing keeps its usual 0-based meaning.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import AlphabetError, EmptyWordError

__all__ = [
    "Word",
    "Occurrence",
    "RootDecomposition",
    "parse_word",
    "alphabet",
    "letter_count",
    "reverse",
    "is_palindrome",
    "occurrences",
    "count_occurrences",
    "is_factor",
    "is_prefix",
    "is_suffix",
    "is_internal",
    "factor_set",
    "all_factors",
    "prefixes",
    "suffixes",
    "period",
    "fractional_root",
    "primitive_root",
    "is_primitive",
    "longest_repeated_prefix",
    "longest_repeated_suffix",
]


class Word(str):
    """Immutable word over an alphabet of at most two letters."""

    def __new__(cls, letters: str | Iterable[str] = ""):
        text = letters if isinstance(letters, str) else "".join(letters)
        if len(set(text)) > 2:
            raise AlphabetError(
                f"word {text!r} uses {len(set(text))} letters, at most 2 allowed"
            )
        return super().__new__(cls, text)

    def at(self, i: int) -> str:
        """Letter at 1-based position ``i``."""
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside 1..{len(self)}")
        return str.__getitem__(self, i - 1)

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


@dataclass(frozen=True)
class Occurrence:
    """1-based inclusive span of a factor occurrence.

    An occurrence of the empty word at boundary ``i`` has ``end == start - 1``.
    """

    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def is_prefix(self) -> bool:
        return self.start == 1

    def is_suffix(self, word_length: int) -> bool:
        return self.end == word_length

    def is_internal(self, word_length: int) -> bool:
        return not self.is_prefix and not self.is_suffix(word_length)

    def to_dict(self) -> dict[str, int]:
        return {"start": self.start, "end": self.end}


@dataclass(frozen=True)
class RootDecomposition:
    root: str
    exponent: int

    @property
    def is_primitive(self) -> bool:
        return self.exponent == 1


def parse_word(text: str) -> Word:
    return Word(text)


def alphabet(w: str) -> frozenset[str]:
    return frozenset(w)


def letter_count(w: str, a: str) -> int:
    return w.count(a)


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def occurrences(u: str, w: str) -> list[Occurrence]:
    """All (possibly overlapping) occurrences of ``u`` in ``w``, by start."""
    k = len(u)
    return [
        Occurrence(i + 1, i + k)
        for i in range(len(w) - k + 1)
        if w.startswith(u, i)
    ]


def count_occurrences(u: str, w: str) -> int:
    k = len(u)
    return sum(1 for i in range(len(w) - k + 1) if w.startswith(u, i))


def is_factor(u: str, w: str) -> bool:
    return u in w


def is_prefix(u: str, w: str) -> bool:
    return w.startswith(u)


def is_suffix(u: str, w: str) -> bool:
    return w.endswith(u)


def is_internal(u: str, w: str) -> bool:
    """True when ``u`` is a factor of ``w`` that is neither prefix nor suffix."""
    return u in w and not w.startswith(u) and not w.endswith(u)


def factor_set(w: str, n: int) -> frozenset[str]:
    if n < 0 or n > len(w):
        return frozenset()
    return frozenset(w[i:i + n] for i in range(len(w) - n + 1))


def all_factors(w: str) -> frozenset[str]:
    return frozenset(
        w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)
    )


def prefixes(w: str) -> list[str]:
    """Pref(w) from shortest (the empty word) to ``w`` itself."""
    return [w[:i] for i in range(len(w) + 1)]


def suffixes(w: str) -> list[str]:
    """Suff(w) from shortest (the empty word) to ``w`` itself."""
    return [w[len(w) - i:] for i in range(len(w) + 1)]


def _require_nonempty(w: str, what: str) -> None:
    if not w:
        raise EmptyWordError(f"{what} is undefined for the empty word")


def period(w: str) -> int:
    _require_nonempty(w, "period")
    n = len(w)
    for p in range(1, n):
        if w[p:] == w[:n - p]:
            return p
    return n


def fractional_root(w: str) -> str:
    _require_nonempty(w, "fractional root")
    return w[:period(w)]


def primitive_root(w: str) -> RootDecomposition:
    # w is a proper power iff its smallest period is a proper divisor of |w|.
    _require_nonempty(w, "primitive root")
    p = period(w)
    if len(w) % p == 0:
        return RootDecomposition(w[:p], len(w) // p)
    return RootDecomposition(w, 1)


def is_primitive(w: str) -> bool:
    return primitive_root(w).is_primitive


def longest_repeated_prefix(w: str) -> str:
    """Longest prefix of ``w`` with at least two occurrences in ``w``."""
    _require_nonempty(w, "longest repeated prefix")
    for k in range(len(w) - 1, 0, -1):
        if w.find(w[:k], 1) != -1:
            return w[:k]
    return ""


def longest_repeated_suffix(w: str) -> str:
    return reverse(longest_repeated_prefix(reverse(w)))
