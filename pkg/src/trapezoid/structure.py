"""Structural witnesses: pathological pairs, central words, factorizations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .classify import (
    Closedness,
    closedness,
    find_balance_violation,
    is_balanced,
    is_central,
    is_trapezoidal,
)
from .complexity import longest_left_special, longest_right_special, parameters
from .errors import InvariantError, NotApplicableError
from .words import (
    fractional_root,
    longest_repeated_prefix,
    longest_repeated_suffix,
    occurrences,
    reverse,
)

__all__ = [
    "PathologicalPair",
    "UnaryPower",
    "Split",
    "DalFactorization",
    "CompleteReturn",
    "BispecialReport",
    "minimal_pathological_pair",
    "central_decomposition",
    "in_suffixes_of_powers",
    "in_prefixes_of_powers",
    "dalessandro_splits",
    "has_dalessandro_split",
    "dalessandro_factorize",
    "complete_returns",
    "longest_bispecial_analysis",
]


@dataclass(frozen=True)
class PathologicalPair:
    """Minimal unbalanced pair ``f = a u a``, ``g = b u b``."""

    f: str
    g: str
    u: str
    a: str
    b: str

    def swapped(self) -> PathologicalPair:
        return PathologicalPair(self.g, self.f, self.u, self.b, self.a)

    def to_dict(self) -> dict[str, str]:
        return {"f": self.f, "g": self.g, "u": self.u, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class UnaryPower:
    x: Optional[str]
    n: int

    def reassemble(self) -> str:
        return (self.x or "") * self.n


@dataclass(frozen=True)
class Split:
    """``u = w1 x y w2 = w2 y x w1`` with ``w1``, ``w2`` central."""

    w1: str
    w2: str
    x: str
    y: str

    def reassemble(self) -> tuple[str, str]:
        return self.w1 + self.x + self.y + self.w2, self.w2 + self.y + self.x + self.w1


CentralDecomposition = Union[UnaryPower, Split]


@dataclass(frozen=True)
class DalFactorization:
    p: str
    q: str
    pair: PathologicalPair
    z_f_rev: str
    z_g: str
    # other split points |p| that also satisfy the power conditions
    alternative_splits: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "pair": self.pair.to_dict(),
            "z_f_rev": self.z_f_rev,
            "z_g": self.z_g,
            "alternative_splits": list(self.alternative_splits),
        }


@dataclass(frozen=True)
class CompleteReturn:
    factor: str
    returns: tuple[str, ...]


@dataclass(frozen=True)
class BispecialReport:
    longest_left_special: str
    longest_right_special: str
    equal: bool
    central: bool
    closedness: Closedness
    longest_repeated_prefix: str
    longest_repeated_suffix: str


def _require_binary(w: str, what: str) -> None:
    if len(set(w)) != 2:
        raise NotApplicableError(f"{what} needs a word over exactly two letters, got {w!r}")


def minimal_pathological_pair(w: str) -> Optional[PathologicalPair]:
    _require_binary(w, "pathological pair")
    v = find_balance_violation(w)
    if v is None:
        return None
    f, g = v.factor_f, v.factor_g
    u, a, b = f[1:-1], f[0], g[0]
    if a == b or f != a + u + a or g != b + u + b or not is_central(u, (a, b)):
        raise InvariantError(f"minimal pair ({f}, {g}) of {w!r} is not of the form (aua, bub)")
    return PathologicalPair(f, g, u, a, b)


def central_decomposition(u: str, letter: Optional[str] = None,
                          alphabet: Optional[str] = None) -> CentralDecomposition:
    """Split a central word as ``w1 x y w2 = w2 y x w1``.

    The two readings ``(w1, x, y, w2)`` and ``(w2, y, x, w1)`` describe the same
    decomposition. ``letter`` picks the one with ``x == letter``; otherwise the
    one with the longer ``w1`` is returned.
    """
    if not is_central(u, alphabet):
        raise NotApplicableError(f"{u!r} is not a central word")
    if len(set(u)) <= 1:
        return UnaryPower(u[0] if u else letter, len(u))
    letters = "".join(sorted(set(u)))
    found = []
    for i in range(len(u) - 1):
        w1, x, y, w2 = u[:i], u[i], u[i + 1], u[i + 2:]
        if (x != y and w2 + y + x + w1 == u
                and is_central(w1, letters) and is_central(w2, letters)):
            found.append(Split(w1, w2, x, y))
    if len(found) != 2 or found[0] != Split(found[1].w2, found[1].w1, found[1].y, found[1].x):
        raise InvariantError(f"central word {u!r} has decompositions {found}")
    if letter is not None:
        return next(s for s in found if s.x == letter)
    return max(found, key=lambda s: len(s.w1))


def in_suffixes_of_powers(p: str, z: str) -> bool:
    reps = -(-len(p) // len(z))
    return (z * reps).endswith(p)


def in_prefixes_of_powers(q: str, z: str) -> bool:
    reps = -(-len(q) // len(z))
    return (z * reps).startswith(q)


def dalessandro_splits(w: str, pair: PathologicalPair) -> list[int]:
    """All ``k`` with ``w[:k]`` in Suff(z~_f*) and ``w[k:]`` in Pref(z_g*)."""
    z_f_rev = reverse(fractional_root(pair.f))
    z_g = fractional_root(pair.g)
    return [
        k for k in range(len(w) + 1)
        if in_suffixes_of_powers(w[:k], z_f_rev) and in_prefixes_of_powers(w[k:], z_g)
    ]


def has_dalessandro_split(w: str) -> bool:
    """Whether an unbalanced binary word factors as required, for either pair orientation."""
    pair = minimal_pathological_pair(w)
    if pair is None:
        raise NotApplicableError(f"{w!r} is balanced")
    return bool(dalessandro_splits(w, pair) or dalessandro_splits(w, pair.swapped()))


def _check_factorization(w: str, d: DalFactorization) -> None:
    par = parameters(w)
    problems = []
    if d.p + d.q != w:
        problems.append("w != pq")
    if not in_suffixes_of_powers(d.p, d.z_f_rev):
        problems.append("p not a suffix of a power of z~_f")
    if not in_prefixes_of_powers(d.q, d.z_g):
        problems.append("q not a prefix of a power of z_g")
    if par.K != len(d.q):
        problems.append(f"K={par.K} != |q|={len(d.q)}")
    if par.R != len(d.p):
        problems.append(f"R={par.R} != |p|={len(d.p)}")
    if longest_right_special(w) != w[:par.R - 1]:
        problems.append("longest right special is not the prefix of length R-1")
    if not (is_balanced(d.p) and is_balanced(d.q)):
        problems.append("p or q not Sturmian")
    if d.pair.f not in d.p or d.pair.g not in d.q:
        problems.append("f not inside p or g not inside q")
    if problems:
        raise InvariantError(f"factorization of {w!r} {d}: {'; '.join(problems)}")


def dalessandro_factorize(w: str) -> DalFactorization:
    """Factor a non-Sturmian trapezoidal word as ``w = p q`` with ``|q| = K_w``."""
    w = str(w)
    _require_binary(w, "factorization")
    if is_balanced(w):
        raise NotApplicableError(f"{w!r} is Sturmian; the factorization is undefined")
    if not is_trapezoidal(w):
        raise NotApplicableError(f"{w!r} is not trapezoidal")
    pair = minimal_pathological_pair(w)
    k = len(w) - parameters(w).K
    for oriented in (pair, pair.swapped()):
        splits = dalessandro_splits(w, oriented)
        if k in splits:
            d = DalFactorization(
                p=w[:k],
                q=w[k:],
                pair=oriented,
                z_f_rev=reverse(fractional_root(oriented.f)),
                z_g=fractional_root(oriented.g),
                alternative_splits=tuple(s for s in splits if s != k),
            )
            _check_factorization(w, d)
            return d
    raise InvariantError(f"no factorization with |q| = K found for trapezoidal {w!r}")


def complete_returns(u: str, w: str) -> CompleteReturn:
    """Distinct factors of ``w`` spanning two consecutive occurrences of ``u``."""
    if not u:
        raise NotApplicableError("complete returns to the empty word are not defined")
    occ = occurrences(u, w)
    if not occ:
        raise NotApplicableError(f"{u!r} is not a factor of {w!r}")
    spans = (w[a.start - 1:b.end] for a, b in zip(occ, occ[1:]))
    return CompleteReturn(u, tuple(dict.fromkeys(spans)))


def longest_bispecial_analysis(w: str) -> BispecialReport:
    w = str(w)
    if not is_trapezoidal(w):
        raise NotApplicableError(f"{w!r} is not trapezoidal")
    lls = longest_left_special(w)
    lrs = longest_right_special(w)
    state = closedness(w)
    report = BispecialReport(
        longest_left_special=lls,
        longest_right_special=lrs,
        equal=lls == lrs,
        central=lls == lrs and is_central(lls, w),
        closedness=state,
        longest_repeated_prefix=longest_repeated_prefix(w),
        longest_repeated_suffix=longest_repeated_suffix(w),
    )
    if state is Closedness.CLOSED:
        ok = report.equal and report.central
    else:
        ok = (report.longest_repeated_prefix == lrs
              and report.longest_repeated_suffix == lls)
    if not ok:
        raise InvariantError(f"special-factor configuration of {w!r} is inconsistent: {report}")
    return report
