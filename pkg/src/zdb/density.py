"""Zero-density bound evaluators and the crossover analysis.

The two headline shapes are

    N(sigma, T) <= C1' * T^{57.8875 (1-sigma)^{3/2}} * (log T)^{10393/900}

with a range-dependent constant C1', and the three-term refinement whose
leading constants are tabulated per height range.  For comparison purposes the
simplified Ingham-shape comparator C * T^{(8/3)(1-sigma)} log^3 T is provided,
together with the sigma threshold below which the Ingham shape wins and the
certified bracketing of the height where the threshold first meets the
Korobov-Vinogradov zero-free boundary.

Heights are astronomical (up to exp(6.7e12) and beyond), so every evaluator
has a ``*_log`` form taking ``log T``; the plain forms accept ``T`` itself for
desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bounds import TRange, log_3e12, zero_free_gap_log, ZeroFreeRegionId
from .interval import (
    DEFAULT_PRECISION,
    DomainError,
    Interval,
    IntervalError,
    Precision,
    interval,
)

__all__ = [
    "BracketFailure",
    "DensityBound",
    "DensityForm",
    "NoCrossover",
    "C1_GENERAL",
    "C1_SIMPLE",
    "C2_GENERAL",
    "THIRD_TERM_PRINTED",
    "LARGE_HEIGHT_CONSTANT",
    "LARGE_HEIGHT_LOG_T_MIN",
    "ingham_type_log",
    "sigma_crossover",
    "sigma_crossover_implicit",
    "t_regime_boundary",
    "three_term_bound_log",
    "simple_bound_log",
    "large_height_bound_log",
]

# exponent coefficients on (1 - sigma)^{3/2}
EXPONENT_MAIN = "57.8875"
EXPONENT_SECOND = "33.08"

# log-power fractions, exact
LOGPOW_MAIN_GENERAL = Fraction(19703, 1800)
LOGPOW_SECOND_GENERAL = Fraction(503, 45)
LOGPOW_THIRD_GENERAL = Fraction(14, 10)
LOGPOW_SIMPLE = Fraction(10393, 900)

# leading constants per height range
C1_GENERAL = {
    TRange.R1: "4.68e23",
    TRange.R2: "4.59e23",
    TRange.R3: "1.45e23",
    TRange.R4: "9.77e21",
}
C2_GENERAL = "7.65e10"
THIRD_TERM_PRINTED = "0.27"
C1_SIMPLE = {
    TRange.R1: "2.15e23",
    TRange.R2: "1.89e23",
    TRange.R3: "4.42e22",
    TRange.R4: "4.72e20",
}
LARGE_HEIGHT_CONSTANT = "4.45e12"
LARGE_HEIGHT_LOG_T_MIN = 6.7 * 10**12  # threshold in log T
_LARGE_HEIGHT_LOG_T_MIN_STR = "6.7e12"


class NoCrossover(IntervalError):
    """The sigma threshold is nonpositive: no admissible crossover."""


class BracketFailure(IntervalError):
    """Bisection found no certified sign change in the search window."""


class DensityForm(Enum):
    THREE_HALVES = "three-halves"
    LINEAR = "linear"


@dataclass(frozen=True)
class DensityBound:
    """A bound A * T^{B * (1-sigma)^e} * (log T)^c with e from the form."""

    A: Interval
    B: Interval
    c: Fraction
    form: DensityForm

    def __post_init__(self):
        if not self.A.lo > 0 or not self.B.lo > 0:
            raise DomainError("density bound constants must be positive")

    def evaluate_log(self, sigma: Interval, log_t: Interval) -> Interval:
        u = Interval.make(1, bits=sigma.bits) - sigma
        e = Fraction(3, 2) if self.form is DensityForm.THREE_HALVES else Fraction(1)
        return self.A * _t_power(self.B, u, e, log_t) * log_t.pow(self.c)


def _u_power(u: Interval, e: Fraction, bits: int) -> Interval:
    """(1-sigma)^e tolerating a zero endpoint."""
    if u.lo > 0:
        return u.pow(e)
    if u.hi == 0:
        return Interval.make(0, bits=bits)
    hi = Interval(u.hi, u.hi).pow(e)
    zero = Interval.make(0, bits=bits)
    return Interval(zero.lo, hi.hi)


def _t_power(b: Interval, u: Interval, e: Fraction, log_t: Interval) -> Interval:
    bits = max(b.bits, u.bits, log_t.bits)
    if u.hi == 0:
        return Interval.make(1, bits=bits)
    return (b * _u_power(u, e, bits) * log_t).exp()


_SIGMA_FLOOR = Fraction(98, 100) - Fraction(1, 2**64)  # outward-rounding tolerance


def _check_sigma(sigma: Interval) -> None:
    if not (sigma.lo >= _SIGMA_FLOOR and sigma.hi <= 1):
        raise DomainError("sigma must lie inside [0.98, 1]")


def range_for_log(log_t: Interval, bits: int = 128) -> tuple[TRange, bool]:
    """Height range for the constants, with a below-verified-height flag.

    Heights at or below 3e12 carry no off-line zeros at all, so any range's
    constants are vacuously valid there; the first range is used and flagged.
    """
    low = log_3e12(bits)
    if log_t.hi <= low.hi:
        return TRange.R1, True
    return TRange.classify_log(log_t, bits), False


def _range_for(log_t: Interval, bits: int) -> TRange:
    return range_for_log(log_t, bits)[0]


def three_term_bound_log(
    sigma: Interval, log_t: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    """Three-term density bound; constants pick the range containing log_t."""
    _check_sigma(sigma)
    bits = max(prec.bits, sigma.bits, log_t.bits)
    if not log_t.lo > 1:
        raise DomainError("need T >= 3")
    rng = _range_for(log_t, bits)
    u = Interval.make(1, bits=bits) - sigma
    main = interval(C1_GENERAL[rng], bits=bits) * _t_power(
        interval(EXPONENT_MAIN, bits=bits), u, Fraction(3, 2), log_t
    ) * log_t.pow(LOGPOW_MAIN_GENERAL)
    second = interval(C2_GENERAL, bits=bits) * _t_power(
        interval(EXPONENT_SECOND, bits=bits), u, Fraction(3, 2), log_t
    ) * log_t.pow(LOGPOW_SECOND_GENERAL)
    third = interval(THIRD_TERM_PRINTED, bits=bits) * log_t.pow(LOGPOW_THIRD_GENERAL)
    return (main + second + third) * log_t.ln()


def simple_bound_log(
    sigma: Interval, log_t: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    _check_sigma(sigma)
    bits = max(prec.bits, sigma.bits, log_t.bits)
    if not log_t.lo > 1:
        raise DomainError("need T >= 3")
    rng = _range_for(log_t, bits)
    u = Interval.make(1, bits=bits) - sigma
    return interval(C1_SIMPLE[rng], bits=bits) * _t_power(
        interval(EXPONENT_MAIN, bits=bits), u, Fraction(3, 2), log_t
    ) * log_t.pow(LOGPOW_SIMPLE)


def large_height_bound_log(
    sigma: Interval, log_t: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    """Sharper constant valid only for log T >= 6.7e12."""
    _check_sigma(sigma)
    bits = max(prec.bits, sigma.bits, log_t.bits)
    if not log_t.certainly_ge(interval(_LARGE_HEIGHT_LOG_T_MIN_STR, bits=bits)):
        raise DomainError("large-height bound needs log T >= 6.7e12")
    u = Interval.make(1, bits=bits) - sigma
    return interval(LARGE_HEIGHT_CONSTANT, bits=bits) * _t_power(
        interval(EXPONENT_MAIN, bits=bits), u, Fraction(3, 2), log_t
    ) * log_t.pow(LOGPOW_SIMPLE)


def ingham_type_log(
    sigma: Interval, log_t: Interval, c: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    """Comparator C * T^{(8/3)(1-sigma)} * log^3 T."""
    bits = max(prec.bits, sigma.bits, log_t.bits, c.bits)
    if not c.lo >= 1:
        raise DomainError("comparator constant must be >= 1")
    if not log_t.lo > 1:
        raise DomainError("need T >= 3")
    u = Interval.make(1, bits=bits) - sigma
    return c * _t_power(interval(Fraction(8, 3), bits=bits), u, Fraction(1), log_t) * log_t.ipow(3)


# T-argument conveniences for desk-scale heights -----------------------------

def three_term_bound(sigma: Interval, t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    return three_term_bound_log(sigma, t.ln(), prec)


def simple_bound(sigma: Interval, t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    return simple_bound_log(sigma, t.ln(), prec)


def ingham_type(sigma: Interval, t: Interval, c: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    return ingham_type_log(sigma, t.ln(), c, prec)


# ---------------------------------------------------------------------------
# crossover analysis
# ---------------------------------------------------------------------------

def sigma_crossover(
    log_t: Interval,
    c: Interval,
    c1_prime: Interval,
    prec: Precision = DEFAULT_PRECISION,
) -> Interval:
    """Threshold sigma* = 1 - (3/8)(log(C1'/C)/log T + (7693/900) loglog T / log T).

    Below sigma* the Ingham-shape comparator dominates the simple bound
    (after the standard simplification dropping the B(1-sigma)^{1/2} term).
    Raises :class:`NoCrossover` when the threshold is certifiably <= 0.
    """
    bits = max(prec.bits, log_t.bits, c.bits, c1_prime.bits)
    if not c.lo >= 1:
        raise DomainError("comparator constant must be >= 1")
    if not log_t.lo > 1:
        raise DomainError("need T >= 3")
    ratio_log = (c1_prime / c).ln()
    drop = (ratio_log / log_t + log_t.ln() * Fraction(7693, 900) / log_t) * Fraction(3, 8)
    sigma_star = Interval.make(1, bits=bits) - drop
    if sigma_star.hi <= 0:
        raise NoCrossover(f"threshold {sigma_star!r} is nonpositive")
    return sigma_star


def sigma_crossover_implicit(
    log_t: Interval,
    c: Interval,
    c1_prime: Interval,
    prec: Precision = DEFAULT_PRECISION,
) -> Interval:
    """Crossover threshold from the full relation, as a cross-check.

    Solves (8/3) u - B u^{3/2} = (log(C1'/C) + (7693/900) loglog T) / log T for
    u = 1 - sigma by certified bisection on the increasing branch
    u in (0, (16/(9B))^2); past its apex the comparison can never flip back,
    so absence of a root there is a certified :class:`NoCrossover`.
    """
    bits = max(prec.bits, log_t.bits, c.bits, c1_prime.bits)
    if not c.lo >= 1:
        raise DomainError("comparator constant must be >= 1")
    b_coef = interval(EXPONENT_MAIN, bits=bits)
    rhs = ((c1_prime / c).ln() + log_t.ln() * Fraction(7693, 900)) / log_t

    def lhs(u: Interval) -> Interval:
        return u * Fraction(8, 3) - b_coef * u.pow(Fraction(3, 2))

    u_apex = (interval(Fraction(16, 9), bits=bits) / b_coef).ipow(2)
    if not lhs(Interval(u_apex.lo, u_apex.lo)).certainly_gt(rhs):
        raise NoCrossover("the full relation has no solution at this height")
    lo = Interval(interval("1e-30", bits=bits).lo, interval("1e-30", bits=bits).lo)
    hi = Interval(u_apex.lo, u_apex.lo)
    for _ in range(prec.max_subdivisions):
        if float(hi.hi - lo.lo) <= 1e-9 * max(float(lo.lo), 1e-30):
            break
        mid_pt = ((lo + hi) * Fraction(1, 2)).midpoint()
        mid = Interval(mid_pt, mid_pt)
        val = lhs(mid) - rhs
        if val.hi < 0:
            lo = mid
        elif val.lo > 0:
            hi = mid
        else:
            break
    u_enclosure = Interval(lo.lo, hi.hi)
    return Interval.make(1, bits=bits) - u_enclosure


def boundary_gap(log_t: Interval, c: Interval, c1_prime: Interval, prec: Precision) -> Interval:
    """KV gap minus the crossover drop; positive iff the regions intersect."""
    kv = zero_free_gap_log(ZeroFreeRegionId.KOROBOV_VINOGRADOV, log_t, prec)
    ratio_log = (c1_prime / c).ln()
    drop = (ratio_log / log_t + log_t.ln() * Fraction(7693, 900) / log_t) * Fraction(3, 8)
    return kv - drop


def t_regime_boundary(
    c: Interval,
    c1_prime: Interval,
    prec: Precision = DEFAULT_PRECISION,
    window: tuple[int, int] = (10, 10**15),
) -> Interval:
    """Certified bracket, in log T, of the height where the crossover region
    first meets the Korobov-Vinogradov zero-free boundary.

    Bisects the sign change of gap(T) - drop(T); returns [lo, hi] with the
    sign change certified inside.
    """
    bits = max(prec.bits, c.bits, c1_prime.bits)
    if not c.lo >= 1:
        raise DomainError("comparator constant must be >= 1")
    lo = interval(window[0], bits=bits)
    hi = interval(window[1], bits=bits)
    f_lo = boundary_gap(lo, c, c1_prime, prec)
    f_hi = boundary_gap(hi, c, c1_prime, prec)
    if not (f_lo.hi < 0 and f_hi.lo > 0):
        raise BracketFailure(
            f"no certified sign change on [{window[0]}, {window[1]}]: "
            f"f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
    budget = prec.max_subdivisions
    steps = 0
    while steps < budget:
        rel = float(hi.hi - lo.lo) / max(1.0, abs(float(lo.lo)))
        if rel < 1e-6:
            break
        mid_pt = ((lo + hi) * Fraction(1, 2)).midpoint()
        mid = Interval(mid_pt, mid_pt)
        val = boundary_gap(mid, c, c1_prime, prec)
        if val.hi < 0:
            lo = mid
        elif val.lo > 0:
            hi = mid
        else:
            break  # enclosure straddles zero: cannot narrow further
        steps += 1
    return Interval(lo.lo, hi.hi)
