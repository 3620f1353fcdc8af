"""Run the standard theorem suite and print a per-check tally with timing.

    python scripts/run_suite.py --jobs 4
"""

import argparse
import time
from collections import Counter

from ratsym.lab import SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--count", type=int, default=SuiteConfig.count)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    args = ap.parse_args()

    cfg = SuiteConfig(count=args.count, seed=args.seed, jobs=args.jobs)
    start = time.perf_counter()
    reports = run_suite(cfg)
    elapsed = time.perf_counter() - start
    passed, failed = Counter(), Counter()
    for r in reports:
        (passed if r.passed else failed)[r.theorem_id] += 1
    for tid in sorted(set(passed) | set(failed)):
        print(f"{tid:28s} {passed[tid]:5d} pass {failed[tid]:3d} fail")
    for r in reports:
        if not r.passed:
            print(r.line())
    print(f"{len(reports)} checks in {elapsed:.1f}s")


if __name__ == "__main__":
    main()
