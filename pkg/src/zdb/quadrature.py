"""Certified upper bounds for the integral shapes used by the estimates.

Two families are covered:

* exponentially decaying tails ``int_{v0}^inf exp(a*v^c - b*v) v^p dv`` with a
  sub-linear perturbation ``a*v^c`` (``0 < c <= 1``), and
* gamma-kernel integrals, both the closed-form ``int_0^inf v^q e^{-b v} dv``
  and the finite line integral of ``|Gamma(alpha-beta+iv)|`` split at a small
  cut point.

Everything returns an interval ``[0, U]`` whose upper endpoint certifiably
dominates the exact integral.  The tail scheme: pick ``v*`` past which the
exponent's derivative is at most ``-b/2``; cover ``[v0, v*]`` with unit-width
panels bounded by interval evaluation; dominate ``[v*, inf)`` by
``C * exp(-(b/2) v) * v^m`` and integrate that majorant in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .interval import (
    DEFAULT_PRECISION,
    DomainError,
    Interval,
    IntervalError,
    Precision,
    const_pi,
    interval,
    upper_ray,
)

__all__ = [
    "DepthExhausted",
    "NotDecaying",
    "TailIntegralSpec",
    "finite_gamma_bound_integral",
    "gamma_kernel_integral",
    "tail_upper_bound",
]


class NotDecaying(IntervalError):
    """The integrand does not decay past the lower limit."""


class DepthExhausted(IntervalError):
    """Subdivision budget ran out before the bound converged."""


def _as_iv(x, bits: int) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.make(x, bits=bits)


@dataclass(frozen=True)
class TailIntegralSpec:
    """Integrand exp(a*v^c - b*v) * v^p on [v0, inf).

    ``a >= 0``, ``0 < c <= 1``, ``b > 0``.  Construction certifies that the
    exponent is decreasing at ``v0`` (``b*v0 > a*v0^c``), except in the pure
    exponential case ``a == 0`` which always decays.
    """

    a: Interval
    c: Fraction
    b: Interval
    p: Interval
    v0: Interval

    @staticmethod
    def make(a, c, b, p, v0, bits: int = 128) -> "TailIntegralSpec":
        a_ = _as_iv(a, bits)
        b_ = _as_iv(b, bits)
        p_ = _as_iv(p, bits)
        v0_ = _as_iv(v0, bits)
        c_ = Fraction(c)
        if not (0 < c_ <= 1):
            raise DomainError(f"exponent power c must lie in (0, 1], got {c_}")
        if a_.lo < 0:
            raise DomainError("growth coefficient a must be nonnegative")
        if not b_.lo > 0:
            raise DomainError("decay rate b must be positive")
        if v0_.lo < 0:
            raise DomainError("lower limit v0 must be nonnegative")
        spec = TailIntegralSpec(a_, c_, b_, p_, v0_)
        if a_.hi != 0:
            if not v0_.lo > 0:
                raise NotDecaying("a > 0 requires v0 > 0")
            if not (b_ * v0_).certainly_gt(a_ * v0_.pow(c_)):
                raise NotDecaying(
                    "cannot certify b*v0 > a*v0^c; integrand may grow at v0"
                )
        return spec


def _closed_tail(beta: Interval, w: Interval, m: int) -> Interval:
    """Exact enclosure of int_w^inf e^{-beta v} v^m dv for integer m >= 0.

    Uses the antiderivative: (m!/beta^{m+1}) e^{-beta w} sum_{j<=m} (beta w)^j/j!.
    """
    bw = beta * w
    fact = 1
    s = Interval.make(1, bits=beta.bits)
    pw = Interval.make(1, bits=beta.bits)
    for j in range(1, m + 1):
        pw = pw * bw
        fact *= j
        s = s + pw * Fraction(1, fact)
    scale = Interval.make(fact, bits=beta.bits) / beta.ipow(m + 1)
    return scale * (-bw).exp() * s


def tail_upper_bound(
    spec: TailIntegralSpec,
    prec: Precision = DEFAULT_PRECISION,
    panel_width: Fraction = Fraction(1),
) -> Interval:
    """Certified [0, U] with the exact tail integral <= U < inf.

    ``panel_width`` only affects the pre-asymptotic section; halving it can
    only tighten U (interval evaluation is inclusion monotone).
    """
    bits = max(prec.bits, spec.b.bits)
    a, b, p, v0, c = spec.a, spec.b, spec.p, spec.v0, spec.c
    if panel_width <= 0:
        raise DomainError("panel width must be positive")

    if c == 1:
        # fold the linear growth into the decay rate
        b_eff = b - a
        if not b_eff.lo > 0:
            raise NotDecaying("a >= b with c = 1: divergent integral")
        return _pure_exponential_tail(b_eff, p, v0, bits)

    if a.hi == 0:
        return _pure_exponential_tail(b, p, v0, bits)

    # v* = (2ac/b)^(1/(1-c)): past it d/dv(a v^c - b v) <= -b/2.
    ratio = (a * Fraction(2) * c) / b
    if ratio.lo > 0:
        v_star_raw = ratio.pow(Fraction(1) / (1 - c))
    else:
        v_star_raw = Interval.make(0, bits=bits)
    v_star = v_star_raw if v_star_raw.hi > v0.hi else v0

    total = Interval.make(0, bits=bits)
    panels = 0
    if v_star.hi > v0.lo:
        # fixed-width panels across [v0.lo, v*]; the closed-form majorant
        # needs the exponent derivative <= -b/2, valid only past v*.
        span = float(v_star.hi - v0.lo)
        n_panels = max(1, int(ceil(span / float(panel_width))))
        if n_panels > prec.max_subdivisions:
            raise DepthExhausted(
                f"{n_panels} panels exceed budget {prec.max_subdivisions}"
            )
        left = Interval(v0.lo, v0.lo)
        for _ in range(n_panels):
            right_hi = min(v_star.hi, (left + panel_width).hi)
            panel = Interval(left.lo, right_hi)
            val = _integrand_enclosure(a, c, b, p, panel)
            total = total + Interval(val.hi, val.hi) * panel.width()
            left = Interval(right_hi, right_hi)
            panels += 1
        v_from = Interval(v_star.hi, v_star.hi)
    else:
        v_from = v0

    # dominate exp(a v^c - b v) <= exp(a w^c - (b/2) w) * exp(-(b/2) v) past w
    w = v_from
    half_b = b * Fraction(1, 2)
    head = (a * w.pow(c) - half_b * w).exp() if w.lo > 0 else Interval.make(1, bits=bits)
    m = max(0, int(ceil(p.hi)))
    p_minus_m = p - m
    if p_minus_m.hi == 0 and p_minus_m.lo == 0:
        vm_factor = Interval.make(1, bits=bits)
    else:
        if not w.lo > 0:
            raise DomainError("non-integer power p requires a positive tail start")
        vm_factor = w.pow(p_minus_m)  # p - m <= 0 and v^(p-m) decreasing
    tail = _closed_tail(half_b, w, m)
    u = total + head * vm_factor * tail
    zero = Interval.make(0, bits=bits)
    return Interval(zero.lo, u.hi)


def _pure_exponential_tail(b: Interval, p: Interval, v0: Interval, bits: int) -> Interval:
    m = max(0, int(ceil(p.hi)))
    p_minus_m = p - m
    if p_minus_m.lo == 0 and p_minus_m.hi == 0:
        factor = Interval.make(1, bits=bits)
    else:
        if not v0.lo > 0:
            raise DomainError("non-integer power p requires v0 > 0")
        factor = v0.pow(p_minus_m)
    tail = _closed_tail(b, v0, m)
    u = factor * tail
    zero = Interval.make(0, bits=bits)
    return Interval(zero.lo, u.hi)


def _integrand_enclosure(a: Interval, c: Fraction, b: Interval, p: Interval, panel: Interval) -> Interval:
    if not panel.lo > 0:
        raise DomainError("panel must be strictly positive")
    expo = a * panel.pow(c) - b * panel
    val = expo.exp()
    return val * panel.pow(p)


def gamma_kernel_integral(q: Interval, b: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """Certified [0, U] with int_0^inf v^q e^{-b v} dv = Gamma(q+1)/b^{q+1} <= U.

    Needs q inside (-1, 1) and b > 0.  Gamma(q+1) <= 1 on q in [0, 1]; for
    q in (-1, 0) the functional equation gives Gamma(q+1) <= 1/(q+1).
    """
    bits = max(prec.bits, q.bits, b.bits)
    if not (q.lo > -1 and q.hi <= 1):
        raise DomainError(f"q must lie inside (-1, 1], got {q!r}")
    if not b.lo > 0:
        raise DomainError("decay rate b must be positive")
    one = Interval.make(1, bits=bits)
    if q.lo >= 0:
        gamma_hi = one
    else:
        # Gamma(q+1) = Gamma(q+2)/(q+1) <= 1/(q+1); worst case at q.lo
        gamma_hi = Interval(one.lo, (one / (Interval(q.lo, q.lo) + one)).hi)
    denom = b.pow(q + one) if not (b.lo == b.hi == 1) else one
    u = gamma_hi / Interval(denom.lo, denom.hi)
    zero = Interval.make(0, bits=bits)
    return Interval(zero.lo, u.hi)


def finite_gamma_bound_integral(
    alpha_minus_beta: Interval,
    big_l: Interval,
    a_split: Interval,
    prec: Precision = DEFAULT_PRECISION,
) -> Interval:
    """Certified [0, U] for int_{-L}^{L} |Gamma(alpha-beta+iv)| dv.

    With x = beta - alpha in (0, 1), uses |Gamma(-x+iv)| <= 1/(|x+iv|*(1-x))
    on |v| <= 1 (so the cut integral is 2*asinh-type in closed form) and the
    explicit Stirling envelope sqrt(2*pi) v^{-1/2} e^{-pi v/2 + 1/6} past 1.
    """
    bits = max(prec.bits, alpha_minus_beta.bits)
    x = -alpha_minus_beta
    if not (x.lo > 0 and x.hi <= 1):
        raise DomainError("alpha - beta must lie in [-1, 0)")
    if not a_split.lo > 0:
        raise DomainError("cut point must be positive")
    if not big_l.lo >= a_split.hi:
        raise DomainError("upper limit must be at least the cut point")
    one = Interval.make(1, bits=bits)
    one_minus_x = one - x
    if not one_minus_x.lo > 0:
        return Interval(Interval.make(0, bits=bits).lo, upper_ray(0, bits).hi)
    inv_gamma_tail = one / one_minus_x  # bounds Gamma(1-x) via Gamma(z) < 1/z

    # |v| <= A: |x + iv| >= x
    near = (Interval(a_split.lo, a_split.hi) * 2) / (x * one_minus_x)

    # A <= |v| <= min(1, L): integrate 1/sqrt(x^2+v^2) in closed form
    mid_hi = one if big_l.lo >= 1 else big_l
    upper_pt = Interval(mid_hi.lo, mid_hi.lo)
    lower_pt = Interval(a_split.hi, a_split.hi)
    num = upper_pt + (x.ipow(2) + upper_pt.ipow(2)).sqrt()
    den = lower_pt + (x.ipow(2) + lower_pt.ipow(2)).sqrt()
    mid = (num / den).ln() * inv_gamma_tail * 2

    total = near + mid
    if big_l.hi > 1:
        pi = const_pi(Precision(bits))
        spec = TailIntegralSpec.make(0, 1, pi * Fraction(1, 2), Fraction(-1, 2), 1, bits=bits)
        stail = tail_upper_bound(spec, prec)
        envelope = (pi * 2).sqrt() * interval(Fraction(1, 6), bits=bits).exp()
        total = total + envelope * Interval(stail.lo, stail.hi) * 2

    zero = Interval.make(0, bits=bits)
    return Interval(zero.lo, total.hi)
