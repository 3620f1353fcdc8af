"""Search random non-radical monomial ideals for failures of the root characterization.

Each instance is checked against three readings of the right-hand side
(see ratsym.lab.check_nonradical_root). Prints a tally per reading and the
first witness found for each.

    python scripts/search_nonradical.py --count 300 --seed 7
"""

import argparse
import random
from collections import Counter
from fractions import Fraction

from ratsym.lab import NONRADICAL_FORMS, check_nonradical_root, random_monomial_ideal

US = (Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(5, 3), Fraction(2))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--exp-max", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    failures = Counter()
    first = {}
    checked = 0
    for _ in range(args.count):
        I = random_monomial_ideal(rng, 2, args.n_max, 4, args.exp_max)
        if I.is_squarefree():
            continue
        for u in US:
            report = check_nonradical_root(I, u)
            checked += 1
            for form, ok in report.details["agree"].items():
                if not ok:
                    failures[form] += 1
                    first.setdefault(form, (I, u, report.witness))
    print(f"{checked} (ideal, u) instances")
    for form in NONRADICAL_FORMS:
        print(f"{form:12s} {failures[form]} failures")
        if form in first:
            I, u, w = first[form]
            print(f"    first: I = ({I}), u = {u}, witness {w}")


if __name__ == "__main__":
    main()
