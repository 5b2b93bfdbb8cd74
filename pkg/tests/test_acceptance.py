"""Acceptance suite: one test per criterion, at the stated tolerances.

Each criterion prints a PASS/FAIL line.  Criterion 1 encodes the original
expectation that only check L25 reports a discrepancy; the certified runs
contradict three further recorded claims (L08, L09, L19 -- see those checks'
notes), so that single test documents the difference and fails honestly
rather than being weakened to match.
"""

import random
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from zdb import bounds, density, ledger, oracle
from zdb.interval import Interval, Precision, interval
from zdb.oracle import _mpf_to_fraction


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[criterion] {name}: {'PASS' if ok else 'FAIL'}{(' -- ' + detail) if detail else ''}"
    print(line)
    # also reach the terminal when pytest captures stdout of passing tests
    print(line, file=sys.__stdout__)


@pytest.fixture(scope="module")
def full_run():
    start = time.monotonic()
    results = {r.check_id: r for r in ledger.run_all(Precision(bits=128))}
    elapsed = time.monotonic() - start
    return results, elapsed


def test_criterion_1_ledger_verdicts(full_run):
    """All checks PASS except the flagged L25 third-term discrepancy."""
    results, elapsed = full_run
    ok_time = elapsed <= 600
    _report("1a ledger completes within 10 minutes", ok_time, f"{elapsed:.1f}s")
    assert ok_time
    l25 = results["L25"]
    ok_l25 = (
        l25.verdict == "FAIL"
        and l25.computed is not None
        and l25.computed.contains(Fraction("0.45"))
        and not l25.computed.contains(Fraction("0.27"))
    )
    _report("1b L25 fails with enclosure containing 0.45", ok_l25)
    assert ok_l25
    fails = sorted(cid for cid, r in results.items() if r.verdict == "FAIL")
    ok_rest = fails == ["L25"]
    _report(
        "1c every other check passes",
        ok_rest,
        f"failing checks: {fails}",
    )
    assert ok_rest, (
        "checks beyond L25 report certified discrepancies with the recorded "
        f"targets: {[c for c in fails if c != 'L25']}; their notes carry "
        "witnesses and validity ranges (see also notes/decisions.md)"
    )


def test_criterion_2_constant_reproduction(full_run):
    results, _ = full_run
    wanted = {
        "L03": "C1 floors", "L04": "C3 ceilings", "L14": "C2 floors",
        "L15": "C4 ceilings", "L16": "C5 ceilings", "L18": "leading ceilings",
        "L20": "C6 floor", "L23": "C7/C8", "L21": "C9", "L24": "C10",
    }
    all_ok = True
    for cid, label in wanted.items():
        ok = results[cid].verdict == "PASS"
        all_ok &= ok
        if not ok:
            _report(f"2 {label} ({cid})", False)
    _report("2 constant ledger reproduction", all_ok)
    assert all_ok


def test_criterion_3_exponent_arithmetic(full_run):
    results, _ = full_run
    ok = results["L26"].verdict == "PASS" and results["L17"].verdict == "PASS"
    _report("3 exact exponent arithmetic", ok)
    assert ok
    assert Fraction(17183, 1800) + Fraction(7, 5) == Fraction(19703, 1800)
    assert Fraction(88, 9) + Fraction(7, 5) == Fraction(503, 45)
    assert Fraction(503, 45) + Fraction(37, 100) == Fraction(10393, 900)


def test_criterion_4_tail_integrals(full_run):
    results, _ = full_run
    ok = all(results[cid].verdict == "PASS" for cid in ("L05", "L06", "L07", "L12", "L21", "L22", "L23"))
    _report("4 certified tail integrals", ok)
    assert ok
    # headline magnitudes, re-stated directly
    err2 = results["L05"].computed
    assert float(err2.hi) <= 1e-12
    err3 = results["L07"].computed
    assert float(err3.hi) <= 1e-10


def test_criterion_5_crossover_bracket():
    start = time.monotonic()
    bracket = density.t_regime_boundary(interval(1), interval("4.72e20"))
    elapsed = time.monotonic() - start
    ok = float(bracket.hi) <= 6.7e12 and elapsed <= 10
    _report("5 crossover bracket", ok, f"log T in [{bracket.lower_decimal(8)}, {bracket.upper_decimal(8)}], {elapsed:.2f}s")
    assert ok


def test_criterion_6_divisor_suite(full_run):
    results, _ = full_run
    start = time.monotonic()
    prefix = oracle.divisor_sum_prefix(10**7)
    rng = random.Random(2024)
    xs = [rng.randint(2, 10**7) for _ in range(1000)]
    violations = 0
    for x in xs:
        exact = int(prefix[x])
        lo, hi = bounds.divisor_sum_band(interval(x))
        if not (lo.lo <= exact <= hi.hi):
            violations += 1
        for coef, threshold in bounds.simplified_divisor_bounds(x):
            cap = interval(coef) * interval(x) * interval(x).ln().ipow(3)
            if not exact <= cap.hi:
                violations += 1
    elapsed = time.monotonic() - start
    ok = violations == 0 and elapsed <= 60 and results["L30"].verdict == "PASS"
    _report("6 divisor-sum suite", ok, f"{elapsed:.1f}s, violations={violations}")
    assert ok


def test_criterion_7_stirling_grid(full_run):
    results, _ = full_run
    ok = results["L31"].verdict == "PASS"
    detail = next((n for n in results["L31"].notes if "grid" in n), "")
    _report("7 Stirling envelope grid", ok, detail)
    assert ok


def test_criterion_8_large_values_suite():
    holds1 = holds2 = 0
    printed_violation_seen = False
    for seed in range(1000):
        rec = oracle.hm_test(oracle.make_hm_instance(seed))
        holds1 += rec["holds1"]
        holds2 += rec["holds2"]
    scaled = oracle.hm_test(oracle.make_hm_instance(3, R=1, dim=2).scaled(1e-3))
    printed_violation_seen = not scaled["printed_holds2"]
    ok = holds1 == 1000 and holds2 == 1000 and printed_violation_seen
    _report(
        "8 large-values inequality suite", ok,
        f"holds1={holds1}/1000, holds2={holds2}/1000, printed-form violation exhibited={printed_violation_seen}",
    )
    assert ok


def test_criterion_9_containment_and_determinism():
    from test_interval import _endpoint_fraction, _iv_op, _mp_op, _OPS

    rng = random.Random(99)
    start = time.monotonic()
    failures = 0
    n = 100_000
    for k in range(n):
        op = _OPS[k % len(_OPS)]
        a = rng.uniform(1e-3, 1e3)
        b = rng.uniform(1e-3, 1e3)
        if op == "exp":
            a = rng.uniform(-30.0, 30.0)
        x, y = Interval.from_float(a), Interval.from_float(b)
        res = _iv_op(op, x, y)
        with mpmath.workprec(300):
            true = _mpf_to_fraction(_mp_op(op, mpmath.mpf(a), mpmath.mpf(b)))
        slack = abs(true) / 2**250 + Fraction(1, 2**400)
        if not (_endpoint_fraction(res.lo) <= true + slack and true - slack <= _endpoint_fraction(res.hi)):
            failures += 1
    elapsed = time.monotonic() - start
    rep1 = ledger.report_json(ledger.run_all(Precision(), ["L02", "L10", "L20", "L26"]))
    rep2 = ledger.report_json(ledger.run_all(Precision(), ["L02", "L10", "L20", "L26"]))
    ok = failures == 0 and rep1 == rep2
    _report(
        "9 interval soundness and determinism", ok,
        f"{n} containment samples in {elapsed:.1f}s, failures={failures}, reports identical={rep1 == rep2}",
    )
    assert ok
