#!/usr/bin/env python3
"""Scan k-rowed plane overpartition families for congruences mod 2^r.

Sweeps progressions l*n + b with l <= l_max for each family and modulus,
separates candidates from rediscovered catalog rows, and optionally appends
everything to a JSONL findings file.
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from qcong.genfun import Family
from qcong.scan import ScanConfig, persist_findings, scan_ap_congruences


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, nargs="+", default=[2, 4, 5, 6, 8])
    parser.add_argument("--bits", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--lmax", type=int, default=12)
    parser.add_argument("--bound", type=int, default=4000)
    parser.add_argument("--min-support", type=int, default=20)
    parser.add_argument("--save", help="append findings to this JSONL file")
    args = parser.parse_args()

    all_findings = []
    for k in args.k:
        for bits in args.bits:
            cfg = ScanConfig(
                Family.k_rowed(k), 2**bits, args.lmax, args.bound,
                min_support=args.min_support,
            )
            t0 = time.time()
            findings = scan_ap_congruences(cfg)
            known = [f for f in findings if f.status.startswith("matches-known")]
            print(
                f"plk{k} mod {2**bits}: {len(findings)} findings "
                f"({len(known)} known) in {time.time() - t0:.1f}s"
            )
            for f in findings:
                print(
                    f"  a({f.claim.l}n+{f.claim.b}) = {f.claim.kind.residue}"
                    f"  support={f.support}  {f.status}"
                )
            all_findings.extend(findings)
    if args.save:
        persist_findings(all_findings, args.save)
        print(f"saved {len(all_findings)} findings to {args.save}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
