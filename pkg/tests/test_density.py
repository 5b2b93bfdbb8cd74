from fractions import Fraction

import mpmath
import numpy as np
import pytest

from zdb.bounds import TRange, RangeStraddle, log_3e12, zero_free_gap_log, ZeroFreeRegionId
from zdb.density import (
    BracketFailure,
    C1_GENERAL,
    C1_SIMPLE,
    C2_GENERAL,
    NoCrossover,
    boundary_gap,
    ingham_type_log,
    range_for_log,
    sigma_crossover,
    t_regime_boundary,
    three_term_bound_log,
    simple_bound_log,
    large_height_bound_log,
)
from zdb.interval import DomainError, Interval, Precision, interval
from zdb.oracle import _mpf_to_fraction


def _oracle_simple(sigma: str, log_t: str, c1p: str) -> Fraction:
    with mpmath.workprec(300):
        s, l = mpmath.mpf(sigma), mpmath.mpf(log_t)
        val = (
            mpmath.mpf(c1p)
            * mpmath.exp(mpmath.mpf("57.8875") * (1 - s) ** mpmath.mpf(1.5) * l)
            * l ** (mpmath.mpf(10393) / 900)
        )
        return _mpf_to_fraction(val)


def test_simple_bound_sigma_one():
    v = simple_bound_log(interval(1), interval(100))
    expect = interval("1.89e23") * interval(100).pow(Fraction(10393, 900))
    assert v.intersects(expect)


def test_simple_bound_oracle_agreement():
    # enclosure agrees with a 300-bit re-evaluation to at least 40 bits
    for sigma, log_t, rng in (("0.98", "29.9336", TRange.R1), ("0.99", "200", TRange.R3)):
        v = simple_bound_log(interval(sigma), interval(log_t))
        true = _oracle_simple(sigma, log_t, C1_SIMPLE[rng])
        assert v.contains(true)
        rel_width = float(v.width().hi) / float(v.lo)
        assert rel_width <= 2**-40


def test_general_bound_third_term_floor():
    g = three_term_bound_log(interval(1), interval(100))
    floor = interval("0.27") * interval(100).pow(Fraction(14, 10)) * interval(100).ln()
    assert g.lo >= floor.lo


def test_general_vs_simple_consistency():
    # C1' * (log T)^{10393/900} dominates the first general term times loglog
    for rng, log_t in ((TRange.R1, "28.7297"), (TRange.R2, "46.2001"),
                       (TRange.R3, "170.2001"), (TRange.R4, "481958.001")):
        l_iv = interval(log_t)
        lam = l_iv.ln()
        simple_part = interval(C1_SIMPLE[rng]) * l_iv.pow(Fraction(10393, 900))
        general_part = interval(C1_GENERAL[rng]) * l_iv.pow(Fraction(19703, 1800)) * lam
        assert simple_part.certainly_ge(general_part)


def test_large_height_bound_smaller():
    sigma = interval(1)
    log_t = interval("6.7e12")
    assert large_height_bound_log(sigma, log_t).certainly_lt(simple_bound_log(sigma, log_t))
    with pytest.raises(DomainError):
        large_height_bound_log(sigma, interval(100))


def test_nonincreasing_in_sigma():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a, b = sorted(rng.uniform(0.98, 0.9999, size=2))
        log_t = float(rng.uniform(30, 400))
        lo_sigma = simple_bound_log(interval(Fraction(f"{a:.6f}")), interval(Fraction(f"{log_t:.3f}")))
        hi_sigma = simple_bound_log(interval(Fraction(f"{b:.6f}")), interval(Fraction(f"{log_t:.3f}")))
        assert hi_sigma.lo <= lo_sigma.hi  # bound does not increase with sigma
        if abs(a - b) > 1e-3:
            assert hi_sigma.certainly_le(lo_sigma)


def test_range_straddle_error():
    with pytest.raises(RangeStraddle):
        simple_bound_log(interval(1), interval("170.1", "170.3"))


def test_below_verified_height_flag():
    rng, below = range_for_log(interval(10))
    assert rng is TRange.R1 and below
    rng, below = range_for_log(interval(100))
    assert rng is TRange.R2 and not below


def test_ingham_comparator():
    v = ingham_type_log(interval(1), interval(100), interval(1))
    assert v.contains(10**6)
    with pytest.raises(DomainError):
        ingham_type_log(interval(1), interval(100), interval(Fraction(1, 2)))


def test_crossover_equal_constants():
    # C = C1': the log-ratio term vanishes
    s = sigma_crossover(interval(100), interval("4.72e20"), interval("4.72e20"))
    expected_drop = interval(Fraction(3, 8)) * interval(Fraction(7693, 900)) * interval(100).ln() / interval(100)
    assert (interval(1) - s).intersects(expected_drop)


def test_no_crossover_at_base_height():
    with pytest.raises(NoCrossover):
        sigma_crossover(log_3e12(), interval(1), interval("2.15e23"))


def test_crossover_in_unit_interval():
    s = sigma_crossover(interval("1e12"), interval(1), interval("4.72e20"))
    assert 0 < float(s.lo) and float(s.hi) < 1


def test_regime_boundary_bracket():
    br = t_regime_boundary(interval(1), interval("4.72e20"))
    assert float(br.hi) <= 6.7e12
    assert float(br.lo) >= 1e12
    # the threshold is certifiably met at 6.7e12 itself
    val = boundary_gap(interval("6.7e12"), interval(1), interval("4.72e20"), Precision())
    assert val.lo > 0


def test_regime_boundary_monotone_in_constant():
    small = t_regime_boundary(interval(1), interval("4.72e20"))
    large = t_regime_boundary(interval(1), interval("4.72e22"))
    assert small.certainly_lt(large)
    with_big_c = t_regime_boundary(interval(1000), interval("4.72e20"))
    assert with_big_c.certainly_lt(small)


def test_regime_boundary_bracket_failure():
    with pytest.raises(BracketFailure):
        t_regime_boundary(interval(1), interval("4.72e20"), window=(10, 100))


def test_simple_form_table_derivation():
    # the simple-form constants arise from the three-term table by absorbing
    # (log T)^{-417/1800} at each range's lower height
    for rng in TRange:
        l_lo = {"R1": log_3e12(), "R2": interval("46.2"),
                "R3": interval("170.2"), "R4": interval(481958)}[rng.value]
        damp = (-(l_lo.ln() * Fraction(417, 1800))).exp()
        derived = interval(C1_GENERAL[rng]) * damp + interval(C2_GENERAL)
        assert derived.certainly_le(interval(C1_SIMPLE[rng]))
        # and tightly: within 0.5 percent
        assert float(derived.lo) >= float(interval(C1_SIMPLE[rng]).lo) * 0.995


def test_density_bound_type():
    from zdb.density import DensityBound, DensityForm

    bound = DensityBound(
        A=interval("4.72e20"), B=interval("57.8875"),
        c=Fraction(10393, 900), form=DensityForm.THREE_HALVES,
    )
    direct = bound.evaluate_log(interval("0.99"), interval(500000))
    named = simple_bound_log(interval("0.99"), interval(500000))
    assert direct.intersects(named)
    with pytest.raises(DomainError):
        DensityBound(A=interval(0), B=interval(1), c=Fraction(3), form=DensityForm.LINEAR)


def test_implicit_crossover_cross_check():
    from zdb.density import sigma_crossover_implicit

    # in the regime where the crossover exists, the dropped B(1-sigma)^{1/2}
    # term is genuinely negligible: both routes agree closely
    log_t = interval("6.7e12")
    simplified = sigma_crossover(log_t, interval(1), interval("4.72e20"))
    implicit = sigma_crossover_implicit(log_t, interval(1), interval("4.72e20"))
    drop_s = interval(1) - simplified
    drop_i = interval(1) - implicit
    ratio = drop_i / drop_s
    assert float(ratio.lo) > 0.999 and float(ratio.hi) < 1.01
    # the implicit threshold is the stricter one (its u must also pay the
    # three-halves term)
    assert float(drop_i.hi) >= float(drop_s.lo)


def test_implicit_crossover_absent_at_small_heights():
    from zdb.density import sigma_crossover_implicit

    # at desk-scale heights the two density shapes never cross: the
    # simplified threshold formula still returns a value there, but the
    # full relation certifies there is nothing to find
    with pytest.raises(NoCrossover):
        sigma_crossover_implicit(interval(10**4), interval(1), interval("4.42e22"))
    s = sigma_crossover(interval(10**4), interval(1), interval("4.42e22"))
    assert 0 < float(s.lo) < 1
