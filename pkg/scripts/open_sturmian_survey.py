"""Summary statistics over open Sturmian words, as raw material for conjectures.

Prints, per length, how many open Sturmian words there are and how their
(H, K) pairs are distributed; writes the full dataset as CSV.

    python scripts/open_sturmian_survey.py --max 12 -o open_sturmian.csv
"""
import argparse
from collections import Counter, defaultdict

from trapezoid import lab


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=12)
    ap.add_argument("-o", "--output", default="open_sturmian.csv")
    args = ap.parse_args()

    rows = lab.explore_open_sturmian(args.max)
    with open(args.output, "w") as fh:
        fh.write(lab.rows_csv(rows, lab.EXPLORE_FIELDS))

    by_length = defaultdict(list)
    for r in rows:
        by_length[len(r["word"])].append(r)
    for n, group in sorted(by_length.items()):
        hk = Counter((r["H"], r["K"]) for r in group)
        unbordered = sum(1 for r in group if r["pi"] == n)
        top = ", ".join(f"{h},{k}:{c}" for (h, k), c in hk.most_common(4))
        print(f"n={n:>2}  open sturmian={len(group):>5}  pi == n: {unbordered:>3}  (H,K) {top}")


if __name__ == "__main__":
    main()
