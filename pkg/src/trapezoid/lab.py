"""Exhaustive sweeps over binary words: census, statement checks, datasets."""
from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from functools import cached_property
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

from .classify import (
    Closedness,
    classify,
    closedness,
    find_balance_violation,
    is_balanced,
    is_central,
    is_trapezoidal,
    prop4_conditions,
    trapezoidal_routes,
)
from .complexity import (
    complexity_profile,
    longest_left_special,
    longest_left_specials,
    longest_right_special,
    longest_right_specials,
    parameters,
)
from .errors import (
    BudgetError,
    InvariantError,
    NotApplicableError,
    RouteDisagreementError,
    UnknownStatementError,
)
from .structure import (
    dalessandro_factorize,
    has_dalessandro_split,
    longest_bispecial_analysis,
    minimal_pathological_pair,
)
from .words import (
    is_palindrome,
    is_primitive,
    longest_repeated_prefix,
    longest_repeated_suffix,
    occurrences,
    period,
    reverse,
)

ENUMERATION_LIMIT = 24
DEFAULT_BUDGET = 16
ALPHABET = "ab"

CENSUS_NOTE = (
    "unary words are counted in total_binary and sturmian, never in trapezoidal"
)


def clear_caches() -> None:
    """Drop memoized per-word results (profiles, parameters, balance, trapezoidality)."""
    for fn in (complexity_profile, parameters, find_balance_violation, is_trapezoidal):
        fn.cache_clear()


def _check_budget(n: int, budget: int) -> None:
    if budget > ENUMERATION_LIMIT:
        raise BudgetError(f"budget {budget} exceeds the hard limit {ENUMERATION_LIMIT}")
    if n < 0:
        raise BudgetError(f"negative length {n}")
    if n > budget:
        raise BudgetError(f"length {n} exceeds the budget {budget}; raise it explicitly")


def enumerate_binary(n: int, alphabet: str = ALPHABET, start: int = 0,
                     stop: Optional[int] = None,
                     budget: int = ENUMERATION_LIMIT) -> Iterator[str]:
    """Words of length ``n`` in lexicographic order, indices ``start..stop-1``."""
    _check_budget(n, budget)
    total = 2 ** n
    stop = total if stop is None else min(stop, total)
    if n == 0:
        if start == 0 and stop > 0:
            yield ""
        return
    table = str.maketrans("01", alphabet[:2])
    for i in range(start, stop):
        yield format(i, f"0{n}b").translate(table)


def partition(n: int, parts: int) -> list[tuple[int, int]]:
    """Split the index range of length-``n`` words into contiguous chunks."""
    total = 2 ** n
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return list(zip(bounds, bounds[1:]))


def _tasks(lengths: Iterable[int], workers: int) -> list[tuple[int, int, int]]:
    return [(n, a, b) for n in lengths for a, b in partition(n, workers)]


def _run(fn: Callable, tasks: Sequence, workers: int) -> list:
    if workers <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


# -- census -------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    length: int
    total_binary: int
    trapezoidal: int
    sturmian: int
    trapezoidal_non_sturmian: int
    open_trapezoidal: int
    closed_trapezoidal: int
    open_sturmian: int
    rich: int
    trapezoidal_palindromes: int

    def check(self) -> None:
        unary = 2 if self.length >= 1 else 0
        problems = []
        if self.trapezoidal != (self.sturmian - unary) + self.trapezoidal_non_sturmian:
            problems.append("trapezoidal != binary sturmian + non-sturmian trapezoidal")
        if self.closed_trapezoidal > self.sturmian:
            problems.append("closed trapezoidal exceeds sturmian")
        if self.trapezoidal > self.rich:
            problems.append("trapezoidal exceeds rich")
        if self.open_trapezoidal + self.closed_trapezoidal != self.trapezoidal:
            problems.append("open + closed trapezoidal != trapezoidal")
        if problems:
            raise InvariantError(f"census row {self.length}: {'; '.join(problems)}")


CENSUS_FIELDS = [f.name for f in fields(CensusRow)]


def _census_chunk(task: tuple[int, int, int]) -> tuple[int, Counter]:
    n, start, stop = task
    c: Counter = Counter()
    for w in enumerate_binary(n, start=start, stop=stop):
        k = classify(w)
        is_open = k.closedness is Closedness.OPEN
        c["total_binary"] += 1
        c["trapezoidal"] += k.trapezoidal
        c["sturmian"] += k.sturmian
        c["trapezoidal_non_sturmian"] += k.trapezoidal and not k.sturmian
        c["open_trapezoidal"] += k.trapezoidal and is_open
        c["closed_trapezoidal"] += k.trapezoidal and not is_open
        c["open_sturmian"] += k.sturmian and is_open
        c["rich"] += k.rich
        c["trapezoidal_palindromes"] += k.trapezoidal and k.palindrome
    return n, c


def census(n_max: int, workers: int = 1, budget: int = DEFAULT_BUDGET) -> list[CensusRow]:
    """Per-length class counts for lengths ``1..n_max``."""
    _check_budget(n_max, budget)
    totals: dict[int, Counter] = {n: Counter() for n in range(1, n_max + 1)}
    for n, c in _run(_census_chunk, _tasks(totals, workers), workers):
        totals[n].update(c)
    rows = []
    for n, c in totals.items():
        row = CensusRow(length=n, **{k: c[k] for k in CENSUS_FIELDS[1:]})
        row.check()
        rows.append(row)
    return rows


def census_csv(rows: Sequence[CensusRow]) -> str:
    buf = io.StringIO()
    buf.write(f"# {CENSUS_NOTE}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_FIELDS)
    for r in rows:
        writer.writerow(row_values(r))
    return buf.getvalue()


def row_values(r: CensusRow) -> list[int]:
    return [getattr(r, k) for k in CENSUS_FIELDS]


def census_json(rows: Sequence[CensusRow]) -> str:
    return json.dumps({"comment": CENSUS_NOTE, "rows": [asdict(r) for r in rows]}, indent=2)


# -- statement checks ----------------------------------------------------------

class WordFacts:
    """Lazily computed facts about one word, shared by all statement checks."""

    def __init__(self, w: str):
        self.w = w
        self.binary = len(set(w)) == 2

    @cached_property
    def params(self):
        return parameters(self.w)

    @cached_property
    def profile(self):
        return complexity_profile(self.w)

    @cached_property
    def balanced(self) -> bool:
        return is_balanced(self.w)

    @cached_property
    def trapezoidal(self) -> bool:
        return is_trapezoidal(self.w)

    @cached_property
    def closed(self) -> bool:
        return closedness(self.w) is Closedness.CLOSED

    @cached_property
    def palindrome(self) -> bool:
        return is_palindrome(self.w)

    @cached_property
    def lls(self) -> str:
        return longest_left_special(self.w)

    @cached_property
    def lrs(self) -> str:
        return longest_right_special(self.w)


def _prop1_shape(x: WordFacts) -> Optional[bool]:
    if not x.binary:
        return None
    p, f, n = x.params, x.profile.f, len(x.w)
    ok = (
        all(f(i + 1) > f(i) for i in range(p.m))
        and all(f(i + 1) >= f(i) for i in range(p.m, p.M))
        and all(f(i + 1) == f(i) - 1 for i in range(p.M, n + 1))
        and (p.R >= p.K or all(f(i) == f(p.m) for i in range(p.m, p.M + 1)))
        and f(p.R) == f(p.L)
        and max(p.R, p.K) == max(p.L, p.H)
        and len(longest_repeated_prefix(x.w)) == p.H - 1
        and len(longest_repeated_suffix(x.w)) == p.K - 1
        and {len(u) for u in longest_left_specials(x.w)} == {p.L - 1}
        and {len(u) for u in longest_right_specials(x.w)} == {p.R - 1}
    )
    return ok


def _prop4_equiv(x: WordFacts) -> Optional[bool]:
    if not x.binary:
        return None
    verdicts = {*trapezoidal_routes(x.w).values(), *prop4_conditions(x.w).values()}
    return len(verdicts) == 1


def _prop5(x: WordFacts) -> Optional[bool]:
    if not (x.binary and x.balanced):
        return None
    return x.trapezoidal


def _prop6(x: WordFacts) -> Optional[bool]:
    if not x.trapezoidal:
        return None
    return classify(x.w).rich


def _lemma6(x: WordFacts) -> Optional[bool]:
    if not x.binary or x.balanced:
        return None
    pair = minimal_pathological_pair(x.w)
    fs, gs = occurrences(pair.f, x.w), occurrences(pair.g, x.w)
    return all(a.end < b.start or b.end < a.start for a in fs for b in gs)


def _thm1(x: WordFacts) -> Optional[bool]:
    if not x.binary or x.balanced:
        return None
    if has_dalessandro_split(x.w) != x.trapezoidal:
        return False
    if x.trapezoidal:
        dalessandro_factorize(x.w)
    return True


def _thm2(x: WordFacts) -> Optional[bool]:
    if not (x.binary and x.palindrome):
        return None
    return x.trapezoidal == x.balanced


def _prop7(x: WordFacts) -> Optional[bool]:
    if not x.trapezoidal:
        return None
    r = reverse(x.w)
    return is_trapezoidal(r) and (closedness(r) is Closedness.CLOSED) == x.closed


def _prop8(x: WordFacts) -> Optional[bool]:
    if not x.trapezoidal:
        return None
    is_open = not x.closed
    by_prefix = longest_repeated_prefix(x.w) == x.lrs
    by_suffix = longest_repeated_suffix(x.w) == x.lls
    return is_open == by_prefix == by_suffix


def _lemma9(x: WordFacts) -> Optional[bool]:
    if not x.trapezoidal:
        return None
    p = x.params
    if x.closed:
        return p.H == p.K and p.L == p.R
    return p.H == p.R and p.K == p.L


def _prop10(x: WordFacts) -> Optional[bool]:
    if not (x.trapezoidal and x.closed):
        return None
    return x.balanced


def _lemma11(x: WordFacts) -> Optional[bool]:
    if not x.trapezoidal or x.closed:
        return None
    return is_primitive(x.w)


def _lemma12(x: WordFacts) -> Optional[bool]:
    if not (x.trapezoidal and x.closed):
        return None
    report = longest_bispecial_analysis(x.w)
    return x.lls == x.lrs and is_central(x.lls, x.w) and report.equal and report.central


def _thm14(x: WordFacts) -> Optional[bool]:
    if not (x.binary and x.palindrome):
        return None
    return x.balanced == (period(x.w) == x.params.R + 1)


def _thm15(x: WordFacts) -> Optional[bool]:
    if not (x.trapezoidal and x.palindrome):
        return None
    return x.closed


def _cor16(x: WordFacts) -> Optional[bool]:
    if not (x.trapezoidal and x.palindrome):
        return None
    return x.lls == x.lrs and is_central(x.lls, x.w)


def _lemma5(x: WordFacts) -> Optional[bool]:
    if not x.trapezoidal or x.balanced:
        return None
    d = dalessandro_factorize(x.w)
    return is_balanced(d.p) and is_balanced(d.q)


STATEMENTS: dict[str, tuple[str, Callable[[WordFacts], Optional[bool]]]] = {
    "prop1_shape": ("complexity is increasing, flat, then decreasing by one", _prop1_shape),
    "prop4_equiv": ("the seven trapezoidal characterizations agree", _prop4_equiv),
    "prop5_sturm_trap": ("Sturmian binary words are trapezoidal", _prop5),
    "prop6_trap_rich": ("trapezoidal words are rich", _prop6),
    "lemma6_no_overlap": ("minimal pathological factors never overlap", _lemma6),
    "thm1_factorization": ("non-Sturmian: trapezoidal iff w = pq factorization", _thm1),
    "thm2_pal": ("trapezoidal palindromes are exactly Sturmian palindromes", _thm2),
    "prop7_reversal": ("open/closed trapezoidal classes are closed under reversal", _prop7),
    "prop8_open_char": ("open iff LRP is the longest right special factor", _prop8),
    "lemma9_hkrl": ("open: H=R, K=L; closed: H=K, L=R", _lemma9),
    "prop10_closed_sturm": ("closed trapezoidal words are Sturmian", _prop10),
    "lemma11_open_primitive": ("open trapezoidal words are primitive", _lemma11),
    "lemma12_central": ("closed trapezoidal: longest special factor is bispecial and central", _lemma12),
    "thm14_period": ("binary palindrome is Sturmian iff period = R + 1", _thm14),
    "thm15_pal_closed": ("trapezoidal palindromes are closed", _thm15),
    "cor16_special": ("trapezoidal palindrome: longest special factors agree and are central", _cor16),
    "lemma5_pq_sturmian": ("both factors p and q of the factorization are Sturmian", _lemma5),
}

_BUG_SIGNALS = (InvariantError, RouteDisagreementError, NotApplicableError)


@dataclass
class StatementCheck:
    statement_id: str
    words_checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class VerificationReport:
    max_length: int
    checks: list[StatementCheck]
    elapsed: float
    halted: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def total_violations(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_length": self.max_length,
            "halted": self.halted,
            "checks": [asdict(c) for c in self.checks],
        }


def _select(statement_filter: Optional[Iterable[str]]) -> list[str]:
    if statement_filter is None:
        return list(STATEMENTS)
    ids = list(dict.fromkeys(statement_filter))
    unknown = [s for s in ids if s not in STATEMENTS]
    if unknown:
        raise UnknownStatementError(f"unknown statement id(s): {', '.join(unknown)}")
    return ids


def _check_word(w: str, ids: Sequence[str]) -> dict[str, Optional[bool]]:
    facts = WordFacts(w)
    out = {}
    for sid in ids:
        try:
            out[sid] = STATEMENTS[sid][1](facts)
        except _BUG_SIGNALS:
            out[sid] = False
    return out


def _verify_chunk(task: tuple[int, int, int, tuple[str, ...], bool]):
    n, start, stop, ids, accumulate = task
    checked: Counter = Counter()
    violations: dict[str, list[str]] = {sid: [] for sid in ids}
    for w in enumerate_binary(n, start=start, stop=stop):
        failed = False
        for sid, res in _check_word(w, ids).items():
            if res is None:
                continue
            checked[sid] += 1
            if not res:
                violations[sid].append(w)
                failed = True
        if failed and not accumulate:
            return checked, violations, True
    return checked, violations, False


def verify_statements(n_max: int, statement_filter: Optional[Iterable[str]] = None,
                      accumulate: bool = False, workers: int = 1,
                      budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Run the selected statements over every binary word of length ``1..n_max``.

    Without ``accumulate`` the sweep stops at the first violating word.
    """
    ids = _select(statement_filter)
    _check_budget(n_max, budget)
    t0 = time.perf_counter()
    checks = {sid: StatementCheck(sid) for sid in ids}
    halted = False
    tasks = [(n, a, b, tuple(ids), accumulate)
             for n, a, b in _tasks(range(1, n_max + 1), workers)]
    if workers <= 1:
        results = []
        for t in tasks:
            results.append(_verify_chunk(t))
            if results[-1][2]:
                break
    else:
        results = _run(_verify_chunk, tasks, workers)
    for checked, violations, stopped in results:
        for sid in ids:
            checks[sid].words_checked += checked[sid]
            checks[sid].violations.extend(violations[sid])
        halted = halted or stopped
    return VerificationReport(n_max, list(checks.values()), time.perf_counter() - t0, halted)


# -- open Sturmian dataset -----------------------------------------------------

EXPLORE_FIELDS = ["word", "H", "K", "L", "R", "pi", "LRP", "longest_right_special"]


def explore_open_sturmian(n_max: int, budget: int = DEFAULT_BUDGET) -> list[dict[str, Any]]:
    """Every open Sturmian binary word of length ``<= n_max`` with its parameters."""
    _check_budget(n_max, budget)
    rows = []
    for n in range(2, n_max + 1):
        for w in enumerate_binary(n):
            if len(set(w)) != 2 or not is_balanced(w):
                continue
            if closedness(w) is Closedness.CLOSED:
                continue
            p = parameters(w)
            rows.append({
                "word": w, "H": p.H, "K": p.K, "L": p.L, "R": p.R, "pi": p.pi,
                "LRP": longest_repeated_prefix(w),
                "longest_right_special": longest_right_special(w),
            })
    return rows


def rows_csv(rows: Sequence[dict[str, Any]], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
