"""Command-line interface.

Usage:
    trapezoid classify aaababa
    trapezoid profile aaababa --ascii-graph
    trapezoid factorize aaababa --json
    trapezoid census --max 14 --csv
    trapezoid verify --max 12 --only prop4_equiv,thm15_pal_closed
    trapezoid explore-open-sturmian --max 10 --csv
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import lab
from .classify import classify
from .complexity import ascii_graph, complexity_profile
from .errors import WordError
from .structure import dalessandro_factorize
from .words import parse_word

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _show(w: str) -> str:
    return w if w else "ε"


def _cmd_classify(args) -> int:
    c = classify(parse_word(args.word))
    if args.json:
        print(json.dumps(c.to_dict(), indent=2))
        return EXIT_OK
    d = c.to_dict()
    params = d.pop("parameters")
    width = max(map(len, d))
    for key, value in d.items():
        print(f"{key:<{width}}  {value}")
    if params:
        print(f"{'parameters':<{width}}  " + " ".join(f"{k}={v}" for k, v in params.items()))
    return EXIT_OK


def _cmd_profile(args) -> int:
    w = parse_word(args.word)
    if args.ascii_graph:
        print(ascii_graph(w))
        return EXIT_OK
    d = complexity_profile(w).to_dict()
    if args.json:
        print(json.dumps(d, indent=2))
        return EXIT_OK
    print(f"word    {d['word']}")
    print("counts  " + " ".join(map(str, d["counts"])))
    if d["H"] is not None:
        print("params  " + " ".join(f"{k}={d[k]}" for k in ("H", "K", "L", "R", "m", "M", "pi")))
    for n, (left, right) in enumerate(zip(d["specials"]["left"], d["specials"]["right"])):
        if left or right:
            print(f"n={n:<3} left={{{', '.join(map(_show, left))}}} "
                  f"right={{{', '.join(map(_show, right))}}}")
    return EXIT_OK


def _cmd_factorize(args) -> int:
    d = dalessandro_factorize(parse_word(args.word))
    if args.json:
        print(json.dumps(d.to_dict(), indent=2))
        return EXIT_OK
    print(f"{d.p} | {d.q}")
    print(f"pair    f={d.pair.f} g={d.pair.g} u={_show(d.pair.u)}")
    print(f"roots   reversed z_f={d.z_f_rev} z_g={d.z_g}")
    if d.alternative_splits:
        print(f"other valid split points: {list(d.alternative_splits)}")
    return EXIT_OK


def _cmd_census(args) -> int:
    rows = lab.census(args.max, workers=args.workers, budget=args.budget)
    if args.csv:
        sys.stdout.write(lab.census_csv(rows))
    elif args.json:
        print(lab.census_json(rows))
    else:
        print(f"# {lab.CENSUS_NOTE}")
        print(" ".join(f"{c:>8}" if i else c for i, c in enumerate(lab.CENSUS_FIELDS)))
        for r in rows:
            print(" ".join(f"{v:>{max(8, len(c))}}" if i else f"{v:>6}"
                           for i, (c, v) in enumerate(zip(lab.CENSUS_FIELDS, lab.row_values(r)))))
    return EXIT_OK


def _cmd_verify(args) -> int:
    only = args.only.split(",") if args.only else None
    report = lab.verify_statements(args.max, only, accumulate=args.accumulate,
                                   workers=args.workers, budget=args.budget)
    width = max(len(c.statement_id) for c in report.checks)
    for c in report.checks:
        status = "ok" if c.ok else "VIOLATED"
        print(f"{c.statement_id:<{width}}  checked={c.words_checked:<8} "
              f"violations={len(c.violations):<4} {status}")
        for w in c.violations[:20]:
            print(f"    witness: {w}")
    print(f"max length {report.max_length}: "
          + ("all statements hold" if report.ok else f"{report.total_violations} violation(s)")
          + (" (halted at first violation)" if report.halted else ""))
    print(f"elapsed {report.elapsed:.1f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_explore(args) -> int:
    rows = lab.explore_open_sturmian(args.max, budget=args.budget)
    if args.csv:
        sys.stdout.write(lab.rows_csv(rows, lab.EXPLORE_FIELDS))
        return EXIT_OK
    for r in rows:
        print(f"{r['word']:<{args.max}}  H={r['H']} K={r['K']} L={r['L']} R={r['R']} "
              f"pi={r['pi']} LRP={_show(r['LRP'])} LRS={_show(r['longest_right_special'])}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trapezoid", description="Trapezoidal, Sturmian, open and closed finite words."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classification flags of one word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("profile", help="factor complexity and special factors")
    p.add_argument("word")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--ascii-graph", action="store_true")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("factorize", help="w = pq factorization of a non-Sturmian trapezoidal word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_factorize)

    def sweep(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--max", type=int, required=True, metavar="N")
        sp.add_argument("--budget", type=int, default=lab.DEFAULT_BUDGET,
                        help=f"largest allowed N (default {lab.DEFAULT_BUDGET}, "
                             f"hard limit {lab.ENUMERATION_LIMIT})")
        sp.set_defaults(func=func)
        return sp

    p = sweep("census", _cmd_census, "per-length counts of each class")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sweep("verify", _cmd_verify, "check every statement on all binary words")
    p.add_argument("--only", metavar="ID,...")
    p.add_argument("--accumulate", action="store_true",
                   help="keep going after the first violation")
    p.add_argument("--workers", type=int, default=1)

    p = sweep("explore-open-sturmian", _cmd_explore, "dataset of open Sturmian words")
    p.add_argument("--csv", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
