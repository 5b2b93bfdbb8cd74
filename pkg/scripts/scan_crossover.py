#!/usr/bin/env python3
"""Scan the sigma crossover threshold against the zero-free boundary.

Reproduces the regime-boundary finding: with comparator constant C = 1 and
the large-height leading constant 4.72e20, the crossover region first meets
the Korobov-Vinogradov zero-free boundary just below log T = 6.7e12.

Usage:
    python scripts/scan_crossover.py [--points 12] [--csv out.csv]
"""

import argparse
import csv
import sys

from zdb import density
from zdb.interval import Precision, interval


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=12)
    parser.add_argument("--lo", type=float, default=6.0e12)
    parser.add_argument("--hi", type=float, default=7.2e12)
    parser.add_argument("--csv", default=None)
    args = parser.parse_args()

    prec = Precision()
    c = interval(1, bits=prec.bits)
    c1p = interval("4.72e20", bits=prec.bits)

    bracket = density.t_regime_boundary(c, c1p, prec)
    print(f"certified crossing bracket: log T in [{bracket.lower_decimal(10)}, {bracket.upper_decimal(10)}]")

    rows = []
    for k in range(args.points):
        log_t_f = args.lo + (args.hi - args.lo) * k / (args.points - 1)
        log_t = interval(f"{log_t_f:.6e}", bits=prec.bits)
        margin = density.boundary_gap(log_t, c, c1p, prec)
        status = "inside" if margin.lo > 0 else ("outside" if margin.hi < 0 else "boundary")
        rows.append({
            "log_t": f"{log_t_f:.6e}",
            "margin_lo": margin.lower_decimal(12),
            "margin_hi": margin.upper_decimal(12),
            "status": status,
        })
        print(f"log T = {log_t_f:.4e}: margin [{margin.lower_decimal(6)}, {margin.upper_decimal(6)}] {status}")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
