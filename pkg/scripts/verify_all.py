"""Exhaustive statement check with a JSON report on disk.

    python scripts/verify_all.py --max 16 -o report.json
"""
import argparse
import json
import sys

from trapezoid import lab


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=16)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget", type=int, default=lab.DEFAULT_BUDGET)
    ap.add_argument("-o", "--output", default="verification.json")
    args = ap.parse_args()

    report = lab.verify_statements(args.max, accumulate=True,
                                   workers=args.workers, budget=args.budget)
    with open(args.output, "w") as fh:
        json.dump(report.to_dict(), fh, indent=2)
    print(f"{report.total_violations} violations over lengths 1..{args.max} "
          f"in {report.elapsed:.1f}s -> {args.output}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
