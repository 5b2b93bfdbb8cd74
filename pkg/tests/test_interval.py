from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdb.interval import (
    DivisionByZeroInterval,
    DomainError,
    Interval,
    IntervalError,
    Precision,
    const_e,
    const_pi,
    interval,
    upper_ray,
)


def test_exact_integer_arithmetic():
    assert (interval(1) + interval(2)).contains(3)
    assert (interval(1) + interval(2)).is_point()
    prod = interval(1, 2) * interval(-1, 1)
    assert prod.lo == -2 and prod.hi == 2


def test_division_outward_rounding():
    third = interval(1) / interval(3)
    assert third.lo < third.hi
    assert float(third.width().hi) <= 2**-120
    assert third.contains(Fraction(1, 3))


def test_division_by_zero_interval():
    with pytest.raises(DivisionByZeroInterval):
        interval(1) / interval(-1, 1)


def test_constants():
    pi = const_pi()
    assert float(pi.width().hi) <= 2**-120
    with mpmath.workprec(300):
        assert float(pi.lo) <= float(mpmath.pi) <= float(pi.hi)
    e = const_e()
    assert e.ln().contains(1)
    recip_pi_sq = 1 / (pi * pi)
    assert recip_pi_sq.is_subset_of(interval("0.101321", "0.101322"))  # 1/pi^2
    assert (pi * pi).is_subset_of(interval("9.8696", "9.8697"))


def test_pow_and_sqrt():
    assert interval(4).pow(Fraction(1, 2)).contains(2)
    assert interval(4).sqrt().contains(2)
    with pytest.raises(DomainError):
        interval(-1, 1).ln()
    with pytest.raises(DomainError):
        interval(0, 1).sqrt()


def test_exp_ln_roundtrip_large():
    t = interval(3 * 10**12)
    assert t.ln().exp().contains(3 * 10**12)


def test_string_endpoints_outward():
    x = interval("0.106")
    assert x.lo < x.hi
    assert x.contains(Fraction(106, 1000))


def test_float_rejected():
    with pytest.raises(TypeError):
        interval(0.1)


def test_ray_arithmetic():
    ray = upper_ray(10**85)
    z = 1 / ray
    assert z.lo == 0
    assert float(z.hi) <= 1.1e-85
    decayed = (-(ray.ln())).exp()
    assert decayed.lo == 0 and float(decayed.hi) < 1e-85


def test_decimal_serialization_directed():
    third = interval(1) / interval(3)
    lo_s, hi_s = third.lower_decimal(25), third.upper_decimal(25)
    assert Fraction(lo_s) <= Fraction(1, 3) <= Fraction(hi_s)
    assert interval(0).lower_decimal() == "0"
    assert upper_ray(1).upper_decimal() == "inf"


_OPS = ("add", "sub", "mul", "div", "exp", "ln", "sqrt", "pow")


def _mp_op(op, a, b):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "exp":
        return mpmath.exp(a)
    if op == "ln":
        return mpmath.log(a)
    if op == "sqrt":
        return mpmath.sqrt(a)
    return mpmath.exp(b * mpmath.log(a))


def _iv_op(op, x, y):
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "exp":
        return x.exp()
    if op == "ln":
        return x.ln()
    if op == "sqrt":
        return x.sqrt()
    return x.pow(y)


def _endpoint_fraction(x) -> Fraction:
    num, den = x.as_integer_ratio()
    return Fraction(int(num), int(den))


def check_containment(op: str, af: float, bf: float) -> None:
    """One random containment sample against the 300-bit reference.

    The reference value carries its own tiny error, so comparisons allow a
    2^-250 relative slack: far below the 128-bit interval resolution.
    """
    x = Interval.from_float(af)
    y = Interval.from_float(bf)
    try:
        res = _iv_op(op, x, y)
    except (DomainError, DivisionByZeroInterval):
        return
    from zdb.oracle import _mpf_to_fraction

    with mpmath.workprec(300):
        true = _mpf_to_fraction(_mp_op(op, mpmath.mpf(af), mpmath.mpf(bf)))
    slack = abs(true) / 2**250 + Fraction(1, 2**400)
    assert _endpoint_fraction(res.lo) <= true + slack, (op, af, bf, res)
    assert true - slack <= _endpoint_fraction(res.hi), (op, af, bf, res)


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from(_OPS),
    st.floats(min_value=1e-6, max_value=1e6),
    st.floats(min_value=1e-6, max_value=1e6),
)
def test_containment_random(op, af, bf):
    check_containment(op, af, bf)


@settings(max_examples=200, deadline=None)
@given(
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=0, max_value=5),
    st.floats(min_value=0, max_value=5),
)
def test_inclusion_monotonicity(center, w_inner, w_extra):
    inner = Interval(
        Interval.from_float(center - w_inner).lo, Interval.from_float(center + w_inner).hi
    )
    outer = Interval(
        Interval.from_float(center - w_inner - w_extra).lo,
        Interval.from_float(center + w_inner + w_extra).hi,
    )
    assert inner.exp().is_subset_of(outer.exp())
    if inner.lo > 0 and outer.lo > 0:
        assert inner.ln().is_subset_of(outer.ln())
        assert inner.sqrt().is_subset_of(outer.sqrt())


def test_determinism_across_runs():
    a = interval("1.5") .exp().ln() * const_pi()
    b = interval("1.5").exp().ln() * const_pi()
    assert a.lo == b.lo and a.hi == b.hi


def test_precision_type():
    with pytest.raises(ValueError):
        Precision(bits=32)
    with pytest.raises(ValueError):
        Precision(max_subdivisions=0)
    p = Precision()
    assert p.bits == 128 and p.max_subdivisions == 10**6


def test_inverted_interval_rejected():
    import gmpy2

    with pytest.raises(IntervalError):
        Interval(gmpy2.mpfr(2), gmpy2.mpfr(1))
    with pytest.raises(IntervalError):
        Interval(gmpy2.mpfr("nan"), gmpy2.mpfr(1))


def test_ipow_even_spans_zero():
    sq = interval(-1, 2).ipow(2)
    assert sq.lo == 0 and sq.hi == 4


def test_thread_schedule_determinism():
    import concurrent.futures

    def work(_):
        x = interval("1.7")
        return ((x.exp().ln() * const_pi()) / interval(3)).upper_decimal(40)

    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        outs = list(pool.map(work, range(64)))
    assert len(set(outs)) == 1
