"""Stabilization of Ass of rational powers on small ideals, with the k at which it settles.

    python scripts/ass_star_survey.py --count 20
"""

import argparse

from ratsym.lab import CorpusConfig, check_ass_star_stabilization, monomial_corpus, squarefree_corpus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--nonsquarefree", action="store_true", help="use small non-squarefree ideals")
    args = ap.parse_args()

    if args.nonsquarefree:
        corpus = monomial_corpus(CorpusConfig(count=args.count, n_max=2, gens_max=3, exp_max=2))
    else:
        corpus = squarefree_corpus(CorpusConfig(count=args.count, n_max=4))
    for I in corpus:
        r = check_ass_star_stabilization(I)
        d = r.details
        print(f"{r.verdict:4s} e={d['e']:<3d} settled at k={d['stabilized_at']:<3d} "
              f"{' '.join(d['primes'])}   ({I})")


if __name__ == "__main__":
    main()
