import json
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from zdb.bounds import TRange
from zdb.interval import Interval, Precision, interval
from zdb.ledger import (
    EXPECTED_DISCREPANCIES,
    ParamBox,
    SingularExponent,
    UnknownCheck,
    branch_and_bound,
    branch_and_bound_extremum,
    check_ids,
    log_x_of,
    log_y_of,
    report_json,
    run_all,
    verify,
    x_of,
    y_of,
)
from zdb.oracle import _mpf_to_fraction


def test_registry_covers_all_ids():
    ids = check_ids()
    assert ids == [f"L{k:02d}" for k in range(1, 33)]


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        verify("NOPE")


def test_exponent_reduction_identities():
    # with alpha = 5 sigma - 4 the X/Y exponents collapse to rationals in 1-sigma
    assert Fraction(3) - Fraction(10) + Fraction(7) == 0  # 3s - 2a - 1 coefficients
    sigma = Fraction("0.987")
    alpha = 5 * sigma - 4
    assert sigma - alpha == 4 * (1 - sigma)
    assert 2 * sigma - 1 - alpha == 3 * (1 - sigma)
    assert (3 * sigma - 2 * alpha - 1) / ((sigma - alpha) * (2 * sigma - 1 - alpha)) == Fraction(7, 12) / (1 - sigma)


def test_log_x_against_oracle():
    sigma, log_t = interval("0.98"), interval("28.7297")
    lx = log_x_of(sigma, log_t)
    with mpmath.workprec(300):
        s = mpmath.mpf("0.98")
        l = mpmath.mpf("28.7297")
        u = 1 - s
        l3 = l + mpmath.log(3)
        val = (
            mpmath.log(mpmath.mpf("1.01e12") * mpmath.mpf("70.6995"))
            + mpmath.mpf("4.43795") * (5 * u) ** mpmath.mpf(1.5) * l3
            + mpmath.mpf(2) / 3 * mpmath.log(l3)
            + 5 * mpmath.log(l)
        ) / (3 * u)
        true = _mpf_to_fraction(val)
    assert lx.contains(true)
    # the floor claim at the base height
    assert float(lx.lo) >= 85 * float(mpmath.log(10))


def test_y_exceeds_x_at_sigma_098():
    sigma, log_t = interval("0.98"), interval("28.7297")
    assert log_y_of(sigma, log_t).certainly_gt(log_x_of(sigma, log_t))
    t = interval(3 * 10**12)
    assert y_of(sigma, t).certainly_gt(x_of(sigma, t))


def test_singular_exponent_at_sigma_one():
    with pytest.raises(SingularExponent):
        log_x_of(interval(1), interval(30))


def test_branch_and_bound_linear_vertex():
    enc, subs, arg = branch_and_bound(
        lambda bx: bx["x"] * 2 + bx["y"] * -3,
        {"x": interval(0, 1), "y": interval(0, 1)},
        Precision(),
        maximize=True,
        rel_tol=1e-9,
        track_arg=True,
    )
    assert enc.contains(2)  # attained at (1, 0)
    assert float(arg["x"].lo) > 0.9 and float(arg["y"].hi) < 0.1


def test_branch_and_bound_extremum_parambox():
    box = ParamBox(aux=(("x", interval(-1, 2)),))
    enc = branch_and_bound_extremum(lambda bx: bx["x"].ipow(2), box, "max", Precision())
    assert enc.contains(4)
    enc_min = branch_and_bound_extremum(
        lambda bx: bx["x"].ipow(2), box, "min", Precision()
    )
    assert float(enc_min.hi) <= 1e-6


def test_weight_maximizer_location():
    # max of 0.04 m - 2 e^{m - log Y} sits at m = log Y + log(0.02)
    log_y = interval(10).ipow(90).ln()
    lo = interval(10).ipow(85).ln()
    hi = (interval(10).ipow(90) * log_y).ln()
    _, _, arg = branch_and_bound(
        lambda bx: bx["m"] * interval("0.04") - (bx["m"] - log_y).exp() * 2,
        {"m": Interval(lo.lo, hi.hi)},
        Precision(),
        maximize=True,
        rel_tol=1e-4,
        track_arg=True,
    )
    m_star = log_y + interval("0.02").ln()
    assert arg["m"].contains(m_star)


def test_verify_trivial_exact_check():
    r = verify("L26")
    assert r.verdict == "PASS"
    assert r.subdivisions == 0


def test_expected_verdicts(ledger_results):
    fails = {cid for cid, r in ledger_results.items() if r.verdict == "FAIL"}
    assert fails == set(EXPECTED_DISCREPANCIES)
    inconclusive = {cid for cid, r in ledger_results.items() if r.verdict == "INCONCLUSIVE"}
    assert not inconclusive


def test_fail_results_carry_witnesses(ledger_results):
    for cid in ("L08", "L09", "L19", "L25"):
        r = ledger_results[cid]
        assert r.verdict == "FAIL"
        assert any("VIOLATED" in n for n in r.notes)
        assert r.witness is not None or cid == "L08"


def test_l25_third_term_contains_045(ledger_results):
    r = ledger_results["L25"]
    assert r.computed is not None and r.computed.contains(Fraction("0.45"))
    assert any("0.27" in n for n in r.notes)


def test_report_schema(ledger_results):
    records = [r.to_record() for r in ledger_results.values()]
    text = json.dumps(records)
    parsed = json.loads(text)
    required = {
        "id", "verdict", "computed_lo", "computed_hi", "claimed",
        "direction", "subdivisions", "paper_anchor", "notes", "witness",
    }
    for rec in parsed:
        assert required.issubset(rec)
        assert rec["verdict"] in ("PASS", "FAIL", "INCONCLUSIVE")


def test_starvation_yields_inconclusive_not_fail():
    starved = Precision(bits=128, max_subdivisions=1)
    results = run_all(starved, ["L03", "L04", "L32"])
    verdicts = {r.check_id: r.verdict for r in results}
    assert verdicts["L03"] == "INCONCLUSIVE"
    assert verdicts["L04"] == "INCONCLUSIVE"
    assert "FAIL" not in verdicts.values()


def test_rerun_bit_identical():
    prec = Precision()
    a = report_json(run_all(prec, ["L02", "L20", "L26"]))
    b = report_json(run_all(prec, ["L02", "L20", "L26"]))
    assert a == b


def test_precision_never_flips_pass_to_fail(ledger_results):
    # raising precision keeps PASS checks passing (monotone verification)
    hi_prec = Precision(bits=192)
    for cid in ("L02", "L10", "L20", "L26", "L30"):
        assert verify(cid, hi_prec).verdict == ledger_results[cid].verdict == "PASS"


def test_spot_audit_c1_claim(ledger_results):
    """PASS spot audit: the block-constant inequality holds at random points
    of its box when evaluated at quadruple precision."""
    assert ledger_results["L03"].verdict == "PASS"
    rng = np.random.default_rng(17)
    floor = {"R1": 85, "R2": 89, "R3": 100, "R4": 165}
    with mpmath.workprec(512):
        for _ in range(200):
            rng_name = ["R1", "R2", "R3", "R4"][int(rng.integers(0, 4))]
            w0 = floor[rng_name] * mpmath.log(10)
            wx = w0 * (1 + mpmath.mpf(float(rng.uniform(0, 3))))
            wy = wx * (1 + mpmath.mpf(float(rng.uniform(0, 3))))
            phi = (1 + mpmath.log(wy) / wy - wx / wy) / mpmath.log(2) - 1 / wy
            c1 = mpmath.mpf("0.49999") / phi
            target = {"R1": "0.3386", "R2": "0.3389", "R3": "0.3395", "R4": "0.3418"}
            assert c1 >= mpmath.mpf(target[rng_name])


def test_spot_audit_l08_witness(ledger_results):
    """No-false-FAIL audit: the reported violation is real at high precision."""
    with mpmath.workprec(512):
        l = mpmath.mpf(10) ** 6
        two_l = 2 * l
        n_up = (
            two_l / (2 * mpmath.pi) * mpmath.log(two_l / (2 * mpmath.pi * mpmath.e))
            + mpmath.mpf("0.1038") * mpmath.log(two_l)
            + mpmath.mpf("0.2573") * mpmath.log(mpmath.log(two_l))
            + mpmath.mpf("9.3675")
        )
        assert 2 * n_up > mpmath.mpf("0.45") * l * mpmath.log(l)


def test_parambox_zero_free_cap():
    log_t = interval(40)
    from zdb.bounds import active_gap_log, TRange as TR

    gap = active_gap_log(TR.R1, log_t, Precision())
    inside = ParamBox(sigma=interval("0.98", "0.99"), log_t=log_t)
    assert inside.check_zero_free_cap()
    touching = ParamBox(sigma=interval("0.98", "0.9999"), log_t=log_t)
    assert not touching.check_zero_free_cap()
    assert float(gap.lo) > 1e-3  # the cap at this height leaves real room


def test_precision_never_flips_fail_to_pass(ledger_results):
    hi_prec = Precision(bits=192)
    assert verify("L25", hi_prec).verdict == ledger_results["L25"].verdict == "FAIL"


def test_spot_audit_l01_random_points(ledger_results):
    assert ledger_results["L01"].verdict == "PASS"
    rng = np.random.default_rng(23)
    l_ranges = {"R1": (28.73, 46.2), "R2": (46.2, 170.2), "R3": (170.2, 481958.0), "R4": (481958.0, 5e6)}
    floors = {"R1": 85, "R2": 89, "R3": 100, "R4": 165}
    with mpmath.workprec(512):
        k_x = mpmath.log(mpmath.mpf("1.01e12") * mpmath.mpf("70.6995"))
        for name, (lo, hi) in l_ranges.items():
            for _ in range(50):
                u = mpmath.mpf(float(rng.uniform(1e-6, 0.02)))
                l = mpmath.mpf(float(rng.uniform(lo, hi)))
                l3 = l + mpmath.log(3)
                log_x = (
                    k_x
                    + mpmath.mpf("4.43795") * (5 * u) ** mpmath.mpf(1.5) * l3
                    + 2 * mpmath.log(l3) / 3
                    + 5 * mpmath.log(l)
                ) / (3 * u)
                assert log_x >= floors[name] * mpmath.log(10)


def test_spot_audit_l30_random_points(ledger_results):
    assert ledger_results["L30"].verdict == "PASS"
    rng = np.random.default_rng(29)
    with mpmath.workprec(512):
        for _ in range(200):
            w = mpmath.mpf(85 * 2.302585) * (1 + mpmath.mpf(float(rng.uniform(0, 5))))
            coef = (
                1 / mpmath.pi**2
                + mpmath.mpf("0.746") / w
                + mpmath.mpf("0.825") / w**2
                + mpmath.mpf("0.462") / w**3
                + mpmath.mpf("9.73") * mpmath.exp(-w / 4) / w**2
                + mpmath.mpf("0.73") * mpmath.exp(-w / 2) / w**3
            )
            assert coef <= mpmath.mpf("0.106")
