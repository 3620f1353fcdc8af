"""Print v(I^(k))/k next to the exact skew Waldschmidt constant.

    python scripts/waldschmidt_sequence.py --ring x,y,z -I "x*y, y*z, z*x" -v 1,1,1 -k 12
"""

import argparse

from ratsym import Ring
from ratsym.parsing import format_rational, parse_ideal
from ratsym.powers import waldschmidt, waldschmidt_sequence


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ring", default="x,y,z")
    ap.add_argument("-I", "--ideal", default="x*y, y*z, z*x")
    ap.add_argument("-v", "--valuation", default="1,1,1")
    ap.add_argument("-k", type=int, default=12)
    args = ap.parse_args()

    I = parse_ideal(args.ideal, Ring.of(args.ring))
    v = tuple(int(x) for x in args.valuation.split(","))
    limit = waldschmidt(I, v)
    print(f"limit {format_rational(limit)}")
    for k, x in enumerate(waldschmidt_sequence(I, v, args.k), start=1):
        print(f"k={k:3d}  {format_rational(x):>8s}  gap {format_rational(x - limit)}")


if __name__ == "__main__":
    main()
