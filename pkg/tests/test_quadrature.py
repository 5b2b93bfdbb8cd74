import math
from fractions import Fraction

import pytest
from scipy import integrate

from zdb.interval import Interval, Precision, const_pi, interval
from zdb.quadrature import (
    DepthExhausted,
    NotDecaying,
    TailIntegralSpec,
    finite_gamma_bound_integral,
    gamma_kernel_integral,
    tail_upper_bound,
)


def test_pure_exponential_exact():
    u = tail_upper_bound(TailIntegralSpec.make(0, 1, 1, 0, 0))
    assert u.hi >= 1 and float(u.hi) <= 1 + 1e-20


def test_gamma_two_exact():
    u = tail_upper_bound(TailIntegralSpec.make(0, 1, 1, 1, 0))
    assert u.hi >= 1 and float(u.hi) <= 1 + 1e-20


def test_offline_tail_shape():
    # the shape used for the off-line remainder: a = B*(1-alpha)^{3/2}, c = 1
    log_t = interval(3 * 10**12).ln()
    a = interval("4.43795") * interval("0.1").pow(Fraction(3, 2))
    spec = TailIntegralSpec.make(
        a, 1, const_pi() * Fraction(1, 2), Fraction(1, 6), Interval(log_t.lo, log_t.lo)
    )
    u = tail_upper_bound(spec)
    assert float(u.hi) <= 1.3e-16  # frozen cap from an independent majorant run
    # numeric sanity: certified bound dominates a numeric evaluation
    val, _ = integrate.quad(
        lambda v: math.exp(float(a.hi) * v - math.pi / 2 * v) * v ** (1 / 6),
        float(log_t.lo), float(log_t.lo) + 60,
    )
    assert float(u.hi) >= val * (1 - 1e-9)


def test_panel_section_sound_and_refines():
    spec = TailIntegralSpec.make(3, Fraction(2, 3), 1, 0, 30)
    u1 = tail_upper_bound(spec)
    u2 = tail_upper_bound(spec, panel_width=Fraction(1, 2))
    u4 = tail_upper_bound(spec, panel_width=Fraction(1, 4))
    val, _ = integrate.quad(lambda v: math.exp(3 * v ** (2 / 3) - v), 30, 400)
    assert float(u1.hi) >= val and float(u4.hi) >= val
    assert u2.hi <= u1.hi and u4.hi <= u2.hi


def test_monotone_in_v0_and_b():
    base = TailIntegralSpec.make(0, 1, 1, 0, 2)
    higher_start = TailIntegralSpec.make(0, 1, 1, 0, 3)
    faster_decay = TailIntegralSpec.make(0, 1, 2, 0, 2)
    u = tail_upper_bound(base)
    assert tail_upper_bound(higher_start).hi <= u.hi
    assert tail_upper_bound(faster_decay).hi <= u.hi


def test_not_decaying():
    with pytest.raises(NotDecaying):
        TailIntegralSpec.make(2, Fraction(1, 2), 1, 0, 1)
    with pytest.raises(NotDecaying):
        TailIntegralSpec.make(1, 1, 1, 0, 5)  # a == b with c = 1


def test_depth_exhausted_on_many_panels():
    spec = TailIntegralSpec.make(3, Fraction(2, 3), 1, 0, 30)
    with pytest.raises(DepthExhausted):
        tail_upper_bound(spec, Precision(bits=128, max_subdivisions=3))


def test_gamma_kernel_exact_points():
    g = gamma_kernel_integral(interval(0), interval(1))
    assert g.hi >= 1 and float(g.hi) <= 1 + 1e-20
    g2 = gamma_kernel_integral(interval(1), interval(2))
    assert g2.hi >= Fraction(1, 4) and float(g2.hi) <= 0.25 + 1e-10


def test_gamma_kernel_dominates_numeric():
    q = interval("0.4", "0.5")
    b = const_pi() * Fraction(1, 2)
    u = gamma_kernel_integral(q, b)
    worst, _ = integrate.quad(
        lambda v: v**0.5 * math.exp(-math.pi / 2 * v), 0, 200, limit=200
    )
    assert float(u.hi) >= worst


def test_gamma_kernel_negative_q():
    u = gamma_kernel_integral(interval("-0.5"), interval(1))
    # Gamma(1/2) = sqrt(pi) = 1.772...; the certified route gives 1/(q+1) = 2
    assert float(u.hi) >= math.sqrt(math.pi)


def test_finite_gamma_spec_point():
    log_t = interval(3 * 10**12).ln()
    lam = log_t.ln()
    cut = 4 / (interval("53.989") * log_t.pow(Fraction(2, 3)) * lam.pow(Fraction(1, 3)))
    u = finite_gamma_bound_integral(interval("-0.05"), log_t, cut)
    target = interval("2.7") * lam
    assert u.hi <= target.lo


def test_finite_gamma_dominates_reference():
    from zdb.oracle import gamma_reference

    log_t = interval(100)
    for x in ("0.03", "0.2", "0.6"):
        cut = interval("0.01")
        u = finite_gamma_bound_integral(-interval(x), log_t, cut)
        # oracle midpoint rule on the true kernel
        total = 0.0
        n = 4000
        width = (100 - 0.01) / n
        for k in range(n):
            v = 0.01 + (k + 0.5) * width
            if v > 40:
                break
            g = gamma_reference(-float(Fraction(x)), v, Precision(64))
            total += float(g.hi) * width
        assert float(u.hi) >= 2 * total * (1 - 1e-6)


from hypothesis import given, settings
from hypothesis import strategies as st


@settings(max_examples=60, deadline=None)
@given(
    st.fractions(min_value=Fraction(0), max_value=Fraction(3)),
    st.sampled_from([Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(1)]),
    st.fractions(min_value=Fraction(1, 2), max_value=Fraction(3)),
    st.fractions(min_value=Fraction(-1, 2), max_value=Fraction(2)),
    st.fractions(min_value=Fraction(1), max_value=Fraction(40)),
)
def test_tail_upper_bound_random_soundness(a, c, b, p, v0):
    try:
        spec = TailIntegralSpec.make(a, c, b, p, v0)
        u = tail_upper_bound(spec)
    except (NotDecaying, DepthExhausted):
        return
    af, bf, pf, v0f, cf = (float(x) for x in (a, b, p, v0, c))
    val, _ = integrate.quad(
        lambda v: math.exp(af * v**cf - bf * v) * v**pf,
        v0f, v0f + 400 / bf, limit=400,
    )
    assert float(u.hi) >= val * (1 - 1e-7)
