"""Regenerate the figure1 golden CSVs without going through the Rust code.

Usage:
    python3 gen_figure1.py > figure1_default.csv
    python3 gen_figure1.py --points 51 --branches 2,5,6 --lo 0.1 --hi 0.9 > figure1_custom.csv
"""
import argparse
import math
import sys


def eof(c):
    root = math.sqrt(1.0 - c * c)
    p = 0.5 + 0.5 * root

    def term(q):
        return 0.0 if q <= 0.0 else -q * math.log2(q)

    return term(p) + term(1.0 - p)


def main(points=101, branches=(2, 3, 4), lo=0.0, hi=1.0):
    out = sys.stdout
    out.write(",".join(["abs_alpha"] + ["eof_%d" % n for n in branches]) + "\n")
    for i in range(points):
        x = lo + (hi - lo) * i / (points - 1)
        a, b = math.sqrt(x), math.sqrt(1.0 - x)
        row = [a] + [eof(2.0 / n * (a * b)) for n in branches]
        out.write(",".join("%.12g" % v for v in row) + "\n")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=101)
    ap.add_argument("--branches", default="2,3,4")
    ap.add_argument("--lo", type=float, default=0.0)
    ap.add_argument("--hi", type=float, default=1.0)
    args = ap.parse_args()
    main(args.points, [int(n) for n in args.branches.split(",")], args.lo, args.hi)
