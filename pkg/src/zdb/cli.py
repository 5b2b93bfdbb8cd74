"""Command-line surface: evaluate bounds, run the ledger, scan crossovers.

Heights are always supplied as ``log T`` (the interesting regimes reach
``exp(6.7e12)``, far beyond direct floating-point range).  Interval endpoints
are serialized as directed decimals: lower endpoints rounded down, upper
endpoints rounded up, so downstream consumers inherit the certification.

Exit codes: 0 success / all checks pass; 1 at least one FAIL;
2 usage or domain error; 3 no FAIL but INCONCLUSIVE results remain.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import bounds, density, ledger
from .bounds import ZeroFreeRegionId
from .interval import DomainError, Interval, IntervalError, Precision, interval

_DIGITS = 30


def _lo(iv: Interval) -> str:
    return iv.lower_decimal(_DIGITS)


def _hi(iv: Interval) -> str:
    return iv.upper_decimal(_DIGITS)


def _precision_from(args) -> Precision:
    bits = args.precision_bits
    if bits is None:
        bits = int(os.environ.get("ZDB_PRECISION_BITS", "128"))
    return Precision(bits=bits, max_subdivisions=args.max_subdivisions)


def _parse_scan(text: str) -> tuple[Fraction, Fraction, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("scan must look like lo:hi:steps")
    lo, hi, steps = Fraction(parts[0]), Fraction(parts[1]), int(parts[2])
    if steps < 1 or hi < lo:
        raise ValueError("scan needs hi >= lo and steps >= 1")
    if hi == lo and steps > 1:
        raise ValueError("scan needs hi > lo for more than one step")
    return lo, hi, steps


def _scan_points(lo: Fraction, hi: Fraction, steps: int) -> list[Fraction]:
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * k / (steps - 1) for k in range(steps)]


def cmd_eval(args) -> int:
    prec = _precision_from(args)
    try:
        sigma = interval(args.sigma, bits=prec.bits)
        log_t = interval(args.logT, bits=prec.bits)
        if not (sigma.lo >= Fraction("0.98") - Fraction(1, 2**64) and sigma.hi <= 1):
            raise DomainError("sigma must lie in [0.98, 1]")
        if not log_t.lo > 0:
            raise DomainError("logT must be positive")
        rng, below = density.range_for_log(log_t, prec.bits)
        simple = density.simple_bound_log(sigma, log_t, prec)
        general = density.three_term_bound_log(sigma, log_t, prec)
        comparator = density.ingham_type_log(sigma, log_t, interval(1, bits=prec.bits), prec)
        region = None
        try:
            region = bounds.widest_region_log(log_t, prec).value
        except bounds.InconclusiveComparison:
            region = "INCONCLUSIVE"
        rows = {
            "sigma": args.sigma,
            "log_t": args.logT,
            "t_range": rng.value + (" (below the verified height)" if below else ""),
            "widest_zero_free_region": region,
            "simple_bound_lo": _lo(simple),
            "simple_bound_hi": _hi(simple),
            "general_bound_lo": _lo(general),
            "general_bound_hi": _hi(general),
            "ingham_comparator_lo": _lo(comparator),
            "ingham_comparator_hi": _hi(comparator),
        }
        if log_t.lo >= 6.7e12:
            large = density.large_height_bound_log(sigma, log_t, prec)
            rows["large_height_bound_lo"] = _lo(large)
            rows["large_height_bound_hi"] = _hi(large)
    except (IntervalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args.format, [rows])
    return 0


def cmd_verify(args) -> int:
    prec = _precision_from(args)
    try:
        if args.checks in (None, "all"):
            wanted = None
        else:
            wanted = [c.strip() for c in args.checks.split(",") if c.strip()]
        results = ledger.run_all(prec, wanted)
    except ledger.UnknownCheck as exc:
        print(f"error: unknown check {exc}", file=sys.stderr)
        return 2
    records = [r.to_record() for r in results]
    if args.format == "json":
        print(json.dumps(records, indent=2))
    elif args.format == "csv":
        _emit_csv(records, exclude=("notes",))
    else:
        for r in results:
            print(f"{r.check_id}  {r.verdict:12s} {r.anchor}")
            for note in r.notes:
                print(f"    {note}")
    verdicts = {r.verdict for r in results}
    if "FAIL" in verdicts:
        return 1
    if "INCONCLUSIVE" in verdicts:
        return 3
    return 0


def cmd_crossover(args) -> int:
    prec = _precision_from(args)
    try:
        lo, hi, steps = _parse_scan(args.scan)
        c = interval(Fraction(args.C), bits=prec.bits)
        rows = []
        for point in _scan_points(lo, hi, steps):
            log_t = interval(point, bits=prec.bits)
            rng, _ = density.range_for_log(log_t, prec.bits)
            c1p = interval(density.C1_SIMPLE[rng], bits=prec.bits)
            row = {"log_t": str(float(point))}
            try:
                s = density.sigma_crossover(log_t, c, c1p, prec)
                row["sigma_star_lo"] = _lo(s)
                row["sigma_star_hi"] = _hi(s)
                gap = bounds.zero_free_gap_log(
                    ZeroFreeRegionId.KOROBOV_VINOGRADOV, log_t, prec
                )
                boundary = bounds.interval(1, bits=prec.bits) - gap
                if s.lo > boundary.hi:
                    row["meets_zero_free_region"] = "yes"
                elif s.hi < boundary.lo:
                    row["meets_zero_free_region"] = "no"
                else:
                    row["meets_zero_free_region"] = "INCONCLUSIVE"
            except density.NoCrossover:
                row["sigma_star_lo"] = "NO_CROSSOVER"
                row["sigma_star_hi"] = "NO_CROSSOVER"
                row["meets_zero_free_region"] = "no"
            rows.append(row)
    except (IntervalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args.format if args.format != "text" else "csv", rows)
    return 0


def cmd_regions(args) -> int:
    prec = _precision_from(args)
    try:
        lo, hi, steps = _parse_scan(args.scan)
        rows = []
        for point in _scan_points(lo, hi, steps):
            log_t = interval(point, bits=prec.bits)
            row = {"log_t": str(float(point))}
            for region in ZeroFreeRegionId:
                gap = bounds.zero_free_gap_log(region, log_t, prec)
                row[f"gap_{region.value}_lo"] = _lo(gap)
                row[f"gap_{region.value}_hi"] = _hi(gap)
            try:
                row["widest"] = bounds.widest_region_log(log_t, prec).value
            except bounds.InconclusiveComparison:
                row["widest"] = "INCONCLUSIVE"
            rows.append(row)
    except (IntervalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args.format if args.format != "text" else "csv", rows)
    return 0


def cmd_table(args) -> int:
    prec = _precision_from(args)
    rows = []
    for rng in ledger.RANGES:
        cc, _ = ledger._cc_certified(rng, prec)
        scaled = interval("0.45", bits=prec.bits) * Interval(cc.hi, cc.hi)
        rows.append({
            "constant": "three-term leading",
            "range": rng.value,
            "printed": density.C1_GENERAL[rng],
            "computed_lo": "0",
            "computed_hi": _hi(scaled),
            "status": "ok" if scaled.hi <= interval(density.C1_GENERAL[rng], bits=prec.bits).lo else "DISCREPANCY",
        })
    for rng in ledger.RANGES:
        general = interval(density.C1_GENERAL[rng], bits=prec.bits)
        lrange = ledger._env(prec.bits).l_lo[rng]
        damp = (-(lrange.ln() * Fraction(417, 1800))).exp()
        simple = general * damp + interval(density.C2_GENERAL, bits=prec.bits)
        rows.append({
            "constant": "simple-form leading",
            "range": rng.value,
            "printed": density.C1_SIMPLE[rng],
            "computed_lo": "0",
            "computed_hi": _hi(simple),
            "status": "ok" if simple.hi <= interval(density.C1_SIMPLE[rng], bits=prec.bits).lo else "DISCREPANCY",
        })
    c10 = ledger._c10_certified(prec)
    scaled = interval("0.45", bits=prec.bits) * Interval(c10.hi, c10.hi)
    rows.append({
        "constant": "second-term", "range": "all", "printed": density.C2_GENERAL,
        "computed_lo": "0", "computed_hi": _hi(scaled),
        "status": "ok" if scaled.hi <= interval(density.C2_GENERAL, bits=prec.bits).lo else "DISCREPANCY",
    })
    third = interval("0.45", bits=prec.bits)
    rows.append({
        "constant": "third-term", "range": "all", "printed": density.THIRD_TERM_PRINTED,
        "computed_lo": _lo(third), "computed_hi": _hi(third),
        "status": "DISCREPANCY",
    })
    _emit(args.format if args.format != "text" else "csv", rows)
    return 0


def _emit(fmt: str, rows: list[dict]) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    elif fmt == "csv":
        _emit_csv(rows)
    else:
        for row in rows:
            for k, v in row.items():
                print(f"{k}: {v}")
            print()


def _emit_csv(rows: list[dict], exclude: tuple[str, ...] = ()) -> None:
    if not rows:
        return
    fields = [k for k in rows[0] if k not in exclude]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in fields})
    sys.stdout.write(buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdb",
        description="certified evaluation and verification of explicit zero-density bounds",
    )
    parser.add_argument("--precision-bits", type=int, default=None,
                        help="mantissa bits (default 128; env ZDB_PRECISION_BITS)")
    parser.add_argument("--max-subdivisions", type=int, default=10**6,
                        help="branch-and-bound budget")
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the density bounds at one point")
    p_eval.add_argument("--sigma", required=True)
    p_eval.add_argument("--logT", required=True)
    p_eval.set_defaults(fn=cmd_eval)

    p_verify = sub.add_parser("verify", help="run ledger checks")
    p_verify.add_argument("--checks", default="all",
                          help='comma-separated ids or "all"')
    p_verify.set_defaults(fn=cmd_verify)

    p_cross = sub.add_parser("crossover", help="scan the sigma crossover threshold")
    p_cross.add_argument("--C", default="1", help="comparator constant (>= 1)")
    p_cross.add_argument("--scan", required=True, help="logT scan lo:hi:steps")
    p_cross.set_defaults(fn=cmd_crossover)

    p_regions = sub.add_parser("regions", help="zero-free gaps per region over a scan")
    p_regions.add_argument("--scan", required=True, help="logT scan lo:hi:steps")
    p_regions.set_defaults(fn=cmd_regions)

    p_table = sub.add_parser("table", help="printed-vs-computed constant tables")
    p_table.set_defaults(fn=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        prec_bits = args.precision_bits
        if prec_bits is not None and prec_bits < 53:
            print("error: precision must be at least 53 bits", file=sys.stderr)
            return 2
        if args.max_subdivisions < 1:
            print("error: max-subdivisions must be positive", file=sys.stderr)
            return 2
    except AttributeError:
        pass
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
