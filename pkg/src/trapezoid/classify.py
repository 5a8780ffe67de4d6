"""Predicates on words: balance, trapezoidality, richness, open/closed."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Optional

from .complexity import WordParameters, complexity_profile, parameters
from .errors import (
    AlphabetError,
    InvariantError,
    RouteDisagreementError,
    UndefinedClassificationError,
)
from .words import (
    is_palindrome,
    is_primitive,
    longest_repeated_prefix,
    occurrences,
)

__all__ = [
    "BalanceViolation",
    "Closedness",
    "Classification",
    "find_balance_violation",
    "is_balanced",
    "is_sturmian",
    "trapezoidal_routes",
    "prop4_conditions",
    "is_trapezoidal",
    "palindromic_factors",
    "is_rich",
    "closedness",
    "is_closed",
    "is_open",
    "is_periodic_like",
    "is_central",
    "is_standard",
    "classify",
]

DEFAULT_LETTERS = ("a", "b")


@dataclass(frozen=True)
class BalanceViolation:
    """Two equal-length factors whose counts of ``letter`` differ by >= 2."""

    factor_f: str
    factor_g: str
    letter: str
    common_length: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "f": self.factor_f, "g": self.factor_g,
            "letter": self.letter, "length": self.common_length,
        }


def _check_alphabet(w: str) -> frozenset[str]:
    letters = frozenset(w)
    if len(letters) > 2:
        raise AlphabetError(f"{w!r} uses {len(letters)} letters, at most 2 allowed")
    return letters


@lru_cache(maxsize=4096)
def find_balance_violation(w: str) -> Optional[BalanceViolation]:
    """Minimal-length unbalanced pair, or ``None`` when ``w`` is balanced.

    Among pairs of the minimal length, ``f`` is the one whose first
    occurrence starts earliest and ``g`` its earliest-starting partner.
    """
    w = str(w)
    if len(_check_alphabet(w)) < 2:
        return None
    x = w[0]
    for n in range(1, len(w) + 1):
        windows = [w[i:i + n] for i in range(len(w) - n + 1)]
        weight = [s.count(x) for s in windows]
        if max(weight) - min(weight) < 2:
            continue
        seen: dict[str, int] = {}
        for s, c in zip(windows, weight):
            seen.setdefault(s, c)
        ordered = list(seen.items())
        for f, cf in ordered:
            for g, cg in ordered:
                if abs(cf - cg) >= 2:
                    letter = x if cf > cg else next(iter(set(w) - {x}))
                    return BalanceViolation(f, g, letter, n)
    return None


def is_balanced(w: str) -> bool:
    return find_balance_violation(w) is None


is_sturmian = is_balanced


def trapezoidal_routes(w: str) -> dict[str, bool]:
    """Three independent trapezoidality verdicts for a binary word.

    ``shape`` checks the piecewise form of the complexity graph,
    ``parameters`` checks ``|w| = L + H``, ``counting`` checks
    ``f_w(n) <= n + 1`` for every ``n``.
    """
    prof = complexity_profile(w)
    par = parameters(w)
    n = len(w)
    f = prof.f
    shape = (
        all(f(i) == i + 1 for i in range(par.m + 1))
        and all(f(i + 1) == f(i) for i in range(par.m, par.M))
        and all(f(i + 1) == f(i) - 1 for i in range(par.M, n + 1))
    )
    return {
        "shape": shape,
        "parameters": n == par.L + par.H,
        "counting": all(c <= k + 1 for k, c in enumerate(prof.counts)),
    }


def prop4_conditions(w: str) -> dict[str, bool]:
    """The remaining equivalent conditions for a binary word to be trapezoidal."""
    prof = complexity_profile(w)
    par = parameters(w)
    c = prof.counts
    return {
        "len_eq_R_plus_K": len(w) == par.R + par.K,
        "one_left_special_per_length": all(len(s) <= 1 for s in prof.left_special),
        "one_right_special_per_length": all(len(s) <= 1 for s in prof.right_special),
        "unit_steps": all(abs(c[k + 1] - c[k]) <= 1 for k in range(len(c) - 1)),
    }


@lru_cache(maxsize=4096)
def is_trapezoidal(w: str) -> bool:
    w = str(w)
    if len(_check_alphabet(w)) != 2:
        return False
    routes = trapezoidal_routes(w)
    verdicts = set(routes.values())
    if len(verdicts) != 1:
        raise RouteDisagreementError(f"trapezoidality routes disagree on {w!r}: {routes}")
    return verdicts.pop()


def palindromic_factors(w: str) -> frozenset[str]:
    """Distinct palindromic factors, the empty word included."""
    found = {""}
    n = len(w)
    for center in range(2 * n - 1):
        lo, hi = center // 2, (center + 1) // 2
        while lo >= 0 and hi < n and w[lo] == w[hi]:
            found.add(w[lo:hi + 1])
            lo -= 1
            hi += 1
    return frozenset(found)


def is_rich(w: str) -> bool:
    return len(palindromic_factors(w)) == len(w) + 1


class Closedness(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


def closedness(w: str) -> Closedness:
    if not w:
        raise UndefinedClassificationError("open/closed is undefined for the empty word")
    h = longest_repeated_prefix(w)
    occ = occurrences(h, w)
    if len(occ) == 2 and occ[1].is_suffix(len(w)):
        return Closedness.CLOSED
    return Closedness.OPEN


def is_closed(w: str) -> bool:
    return closedness(w) is Closedness.CLOSED


def is_open(w: str) -> bool:
    return closedness(w) is Closedness.OPEN


def is_periodic_like(w: str) -> bool:
    """The longest repeated prefix is never followed by two different letters."""
    h = longest_repeated_prefix(w)
    followers = {w[o.end] for o in occurrences(h, w) if o.end < len(w)}
    return len(followers) <= 1


def _two_letters(u: str, alphabet: Optional[Iterable[str]]) -> tuple[str, str]:
    letters = sorted(_check_alphabet(u))
    pool = sorted(set(alphabet)) if alphabet is not None else list(DEFAULT_LETTERS)
    for c in pool + list(DEFAULT_LETTERS) + ["x", "y"]:
        if len(letters) == 2:
            break
        if c not in letters:
            letters.append(c)
    return letters[0], letters[1]


def is_central(u: str, alphabet: Optional[Iterable[str]] = None) -> bool:
    """Palindrome ``u`` with ``a u a`` and ``b u b`` both balanced.

    When ``u`` has fewer than two letters the missing ones come from
    ``alphabet`` (default ``{a, b}``).
    """
    if not is_palindrome(u):
        return False
    a, b = _two_letters(u, alphabet)
    return is_balanced(a + u + a) and is_balanced(b + u + b)


def is_standard(u: str, alphabet: Optional[Iterable[str]] = None) -> bool:
    if len(u) == 1:
        return True
    if len(u) < 2 or u[-1] == u[-2]:
        return False
    return is_central(u[:-2], alphabet=u[-2:])


@dataclass(frozen=True)
class Classification:
    word: str
    is_binary: bool
    balanced: bool
    sturmian: bool
    trapezoidal: bool
    rich: bool
    closedness: Closedness
    primitive: bool
    palindrome: bool
    central: bool
    standard: bool
    parameters: Optional[WordParameters]

    def to_dict(self) -> dict[str, Any]:
        return {
            "word": self.word,
            "is_binary": self.is_binary,
            "balanced": self.balanced,
            "sturmian": self.sturmian,
            "trapezoidal": self.trapezoidal,
            "rich": self.rich,
            "closedness": self.closedness.value,
            "primitive": self.primitive,
            "palindrome": self.palindrome,
            "central": self.central,
            "standard": self.standard,
            "parameters": self.parameters.to_dict() if self.parameters else None,
        }


def _check_lattice(c: Classification) -> None:
    closed = c.closedness is Closedness.CLOSED
    rules = [
        ("sturmian => trapezoidal", not (c.is_binary and c.sturmian) or c.trapezoidal),
        ("trapezoidal => rich", not c.trapezoidal or c.rich),
        ("closed trapezoidal => sturmian", not (c.trapezoidal and closed) or c.sturmian),
        ("open trapezoidal => primitive", not (c.trapezoidal and not closed) or c.primitive),
        ("trapezoidal palindrome => sturmian and closed",
         not (c.trapezoidal and c.palindrome) or (c.sturmian and closed)),
        ("central => palindrome and sturmian",
         not c.central or (c.palindrome and c.sturmian)),
    ]
    broken = [name for name, ok in rules if not ok]
    if broken:
        raise InvariantError(f"{c.word!r} violates: {', '.join(broken)}")


def classify(w: str) -> Classification:
    w = str(w)
    _check_alphabet(w)
    state = closedness(w)
    binary = len(set(w)) == 2
    balanced = is_balanced(w)
    result = Classification(
        word=w,
        is_binary=binary,
        balanced=balanced,
        sturmian=balanced,
        trapezoidal=is_trapezoidal(w),
        rich=is_rich(w),
        closedness=state,
        primitive=is_primitive(w),
        palindrome=is_palindrome(w),
        central=is_central(w),
        standard=is_standard(w),
        parameters=parameters(w) if binary else None,
    )
    _check_lattice(result)
    return result
