"""Factor complexity, special factors and the H, K, L, R parameters."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .errors import AmbiguousSpecialError, UndefinedParameterError
from .words import count_occurrences, period

__all__ = [
    "ComplexityProfile",
    "WordParameters",
    "complexity_profile",
    "left_special_factors",
    "right_special_factors",
    "bispecial_factors",
    "parameters",
    "longest_left_specials",
    "longest_right_specials",
    "longest_left_special",
    "longest_right_special",
    "ascii_graph",
]


@dataclass(frozen=True)
class ComplexityProfile:
    """Complexity counts ``f_w(0..|w|+1)`` with per-length special factors.

    ``left_special[n]`` and ``right_special[n]`` hold the special factors of
    length ``n`` for ``0 <= n <= |w|``.
    """

    word: str
    counts: tuple[int, ...]
    left_special: tuple[frozenset[str], ...]
    right_special: tuple[frozenset[str], ...]

    def f(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative length")
        return self.counts[n] if n < len(self.counts) else 0

    @property
    def is_binary(self) -> bool:
        return len(self.counts) > 1 and self.counts[1] == 2

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"word": self.word, "counts": list(self.counts)}
        if self.is_binary:
            out.update(parameters(self.word).to_dict())
        else:
            out.update(dict.fromkeys(("H", "K", "L", "R", "m", "M", "pi")))
        out["specials"] = {
            "left": [sorted(s) for s in self.left_special],
            "right": [sorted(s) for s in self.right_special],
        }
        return out


@dataclass(frozen=True)
class WordParameters:
    H: int
    K: int
    L: int
    R: int
    m: int
    M: int
    pi: int
    word: str

    def to_dict(self) -> dict[str, int]:
        return {
            "H": self.H, "K": self.K, "L": self.L, "R": self.R,
            "m": self.m, "M": self.M, "pi": self.pi,
        }


@lru_cache(maxsize=4096)
def complexity_profile(w: str) -> ComplexityProfile:
    w = str(w)
    n = len(w)
    counts = []
    lefts = []
    rights = []
    for k in range(n + 1):
        counts.append(len({w[i:i + k] for i in range(n - k + 1)}))
        left_ext: dict[str, set[str]] = {}
        right_ext: dict[str, set[str]] = {}
        for i in range(n - k):
            x = w[i:i + k + 1]
            left_ext.setdefault(x[1:], set()).add(x[0])
            right_ext.setdefault(x[:-1], set()).add(x[-1])
        lefts.append(frozenset(u for u, e in left_ext.items() if len(e) > 1))
        rights.append(frozenset(u for u, e in right_ext.items() if len(e) > 1))
    counts.append(0)
    return ComplexityProfile(w, tuple(counts), tuple(lefts), tuple(rights))


def left_special_factors(w: str, n: int) -> frozenset[str]:
    if n < 0 or n > len(w):
        return frozenset()
    return complexity_profile(w).left_special[n]


def right_special_factors(w: str, n: int) -> frozenset[str]:
    if n < 0 or n > len(w):
        return frozenset()
    return complexity_profile(w).right_special[n]


def bispecial_factors(w: str) -> frozenset[str]:
    prof = complexity_profile(w)
    return frozenset().union(
        *(l & r for l, r in zip(prof.left_special, prof.right_special))
    )


def _require_binary(w: str) -> None:
    if len(set(w)) != 2:
        raise UndefinedParameterError(
            f"parameters are undefined for {w!r}: need exactly two letters"
        )


def _first_unique_prefix_length(w: str) -> int:
    return next(k for k in range(1, len(w) + 1) if count_occurrences(w[:k], w) == 1)


@lru_cache(maxsize=4096)
def parameters(w: str) -> WordParameters:
    w = str(w)
    _require_binary(w)
    prof = complexity_profile(w)
    H = _first_unique_prefix_length(w)
    K = _first_unique_prefix_length(w[::-1])
    L = next(k for k, s in enumerate(prof.left_special) if not s)
    R = next(k for k, s in enumerate(prof.right_special) if not s)
    return WordParameters(H, K, L, R, min(R, K), max(R, K), period(w), w)


def _longest_nonempty(layers: tuple[frozenset[str], ...]) -> frozenset[str]:
    for s in reversed(layers):
        if s:
            return s
    return frozenset()


def longest_left_specials(w: str) -> frozenset[str]:
    _require_binary(w)
    return _longest_nonempty(complexity_profile(w).left_special)


def longest_right_specials(w: str) -> frozenset[str]:
    _require_binary(w)
    return _longest_nonempty(complexity_profile(w).right_special)


def _only(candidates: frozenset[str], side: str, w: str) -> str:
    if len(candidates) != 1:
        raise AmbiguousSpecialError(
            f"{w!r} has {len(candidates)} longest {side} special factors: "
            f"{sorted(candidates)}"
        )
    return next(iter(candidates))


def longest_left_special(w: str) -> str:
    return _only(longest_left_specials(w), "left", w)


def longest_right_special(w: str) -> str:
    return _only(longest_right_specials(w), "right", w)


def ascii_graph(w: str, mark: str = "#") -> str:
    """Column chart of ``f_w(n)`` for ``n = 0..|w|+1``."""
    counts = complexity_profile(w).counts
    width = max(2, len(str(len(counts) - 1)) + 1)
    top = max(counts)
    lines = []
    for level in range(top, 0, -1):
        row = "".join(
            (mark if c >= level else " ").rjust(width) for c in counts
        )
        lines.append(f"{level:>3} |{row}")
    lines.append("    +" + "-" * (width * len(counts)))
    lines.append("     " + "".join(str(n).rjust(width) for n in range(len(counts))))
    return "\n".join(lines)
