#!/usr/bin/env python3
"""Run the full built-in congruence suite at its reference bounds.

The mod-4 claims run at bound 2000 (6930 for the 3465-progressions so the
base row sees two members), the mod-8 claims at 4620 = 210*22, and the
mod-12/64 overpartition claims at 4000.  Prints one line per claim and a
summary; exits nonzero if anything fails.
"""

import argparse
import sys
import time
from collections import Counter

sys.path.insert(0, "src")

from qcong.congruence import SeriesStore, builtin_suite, verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=2)
    parser.add_argument("--quiet", action="store_true", help="summary only")
    args = parser.parse_args()

    groups = [
        ("mod-4 @2000", lambda c: c.modulus == 4 and "3465" not in c.label, 2000),
        ("mod-4 3465-rows @6930", lambda c: c.modulus == 4 and "3465" in c.label, 6930),
        ("mod-8 @4620", lambda c: c.modulus == 8, 4620),
        ("mod-12 @4000", lambda c: c.modulus == 12, 4000),
        ("mod-64 @4000", lambda c: c.modulus == 64, 4000),
    ]
    suite = builtin_suite()
    stores = {}
    failures = 0
    outcomes = Counter()
    for name, selector, bound in groups:
        claims = [c for c in suite if selector(c)]
        if not claims:
            continue
        store = stores.setdefault(bound, SeriesStore(bound))
        t0 = time.time()
        reports = verify(claims, store, bound, jobs=args.jobs)
        elapsed = time.time() - t0
        for r in reports:
            outcomes[r.outcome] += 1
            if not r.passed:
                failures += 1
            if not args.quiet or not r.passed:
                mark = "PASS" if r.passed else "FAIL"
                extra = "" if r.passed else f"  counterexample {r.counterexample}"
                print(f"  {mark} {r.claim.label}  members={r.members}{extra}")
        print(f"{name}: {len(reports)} claims in {elapsed:.1f}s")
    print(f"total: {dict(outcomes)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
