"""Write the per-length census of word classes to a CSV file.

    python scripts/census_table.py --max 16 --workers 4 -o census.csv
"""
import argparse
import time

from trapezoid import lab


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=14)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget", type=int, default=lab.DEFAULT_BUDGET)
    ap.add_argument("-o", "--output", default="census.csv")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = lab.census(args.max, workers=args.workers, budget=args.budget)
    with open(args.output, "w") as fh:
        fh.write(lab.census_csv(rows))
    print(f"{len(rows)} rows -> {args.output} ({time.perf_counter() - t0:.1f}s)")
    for r in rows:
        share = r.open_trapezoidal / r.trapezoidal if r.trapezoidal else 0.0
        print(f"n={r.length:>2}  trapezoidal={r.trapezoidal:>6}  open share={share:.3f}")


if __name__ == "__main__":
    main()
