#!/usr/bin/env python3
"""Run the full verification ledger and print a readable report.

Usage:
    python scripts/run_ledger.py [--bits 128] [--json out.json]
"""

import argparse
import sys
import time

from zdb import ledger
from zdb.interval import Precision


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bits", type=int, default=128)
    parser.add_argument("--max-subdivisions", type=int, default=10**6)
    parser.add_argument("--json", default=None, help="also write the JSON report here")
    args = parser.parse_args()

    prec = Precision(bits=args.bits, max_subdivisions=args.max_subdivisions)
    start = time.monotonic()
    results = ledger.run_all(prec)
    elapsed = time.monotonic() - start

    width = max(len(r.anchor) for r in results)
    counts = {"PASS": 0, "FAIL": 0, "INCONCLUSIVE": 0}
    for r in results:
        counts[r.verdict] += 1
        print(f"{r.check_id}  {r.verdict:12s} {r.anchor:{width}s}")
        if r.verdict != "PASS":
            for note in r.notes:
                print(f"      {note}")
    print()
    print(
        f"{counts['PASS']} pass, {counts['FAIL']} fail, "
        f"{counts['INCONCLUSIVE']} inconclusive in {elapsed:.1f}s at {args.bits} bits"
    )
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(ledger.report_json(results))
        print(f"report written to {args.json}")
    return 0 if counts["FAIL"] == 0 and counts["INCONCLUSIVE"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
