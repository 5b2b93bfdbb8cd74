"""Certified evaluators for the explicit estimates the verification relies on.

All logarithms are natural.  Heights are usually passed as ``log T`` because
the interesting ranges reach far beyond floating-point range; every function
taking ``T`` directly has a ``*_log`` twin taking ``log T``.

Covered here:

* the four explicit zero-free regions (classical, intermediate via the J
  function, Littlewood shape, Korobov-Vinogradov shape) and which is widest,
* the zeta growth bound  A |t|^{B (1-sigma)^{3/2}} (log|t|)^{2/3}
  with A = 70.6995, B = 4.43795,
* the zero-counting estimate |N(T) - (T/2pi) log(T/(2 pi e))| <=
  0.1038 log T + 0.2573 loglog T + 9.3675,
* the explicit Stirling envelope for |Gamma(sigma+it)|,
* the summatory divisor-square bound with exact leading constant 1/pi^2.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .interval import (
    DEFAULT_PRECISION,
    DomainError,
    Interval,
    IntervalError,
    Precision,
    const_pi,
    interval,
)

__all__ = [
    "GROWTH_A",
    "GROWTH_B",
    "InconclusiveComparison",
    "TRange",
    "ZeroFreeRegionId",
    "divisor_sum_band",
    "divisor_sum_upper",
    "j_function",
    "j_function_log",
    "nt_lower",
    "nt_upper",
    "richert_m",
    "richert_m_log",
    "simplified_divisor_bounds",
    "stirling_gamma_upper",
    "widest_region",
    "widest_region_log",
    "zero_free_gap",
    "zero_free_gap_log",
]

# zeta growth bound constants (valid for |t| >= 3, 1/2 <= sigma <= 1)
GROWTH_A = "70.6995"
GROWTH_B = "4.43795"

# zero-counting error constants (valid for T >= e)
_NT_C1, _NT_C2, _NT_C3 = "0.1038", "0.2573", "9.3675"

# divisor-square summatory constants; the three trailing ones are only known
# to three decimals, so they are stored as honest two-sided intervals.
_DSQ_C2 = ("0.745", "0.746")
_DSQ_C3 = ("0.824", "0.825")
_DSQ_C4 = ("0.461", "0.462")
_DSQ_ERR_A = "9.73"
_DSQ_ERR_B = "0.73"


class InconclusiveComparison(IntervalError):
    """Interval enclosures overlap; the comparison cannot be certified."""


class ZeroFreeRegionId(Enum):
    CLASSICAL = "classical"
    INTERMEDIATE = "intermediate"
    LITTLEWOOD = "littlewood"
    KOROBOV_VINOGRADOV = "korobov-vinogradov"


class TRange(Enum):
    """Height regimes, boundaries in log T; each range is (lo, hi]."""

    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"

    @property
    def log_bounds(self) -> tuple[Fraction | None, Fraction | None]:
        return _TRANGE_LOG_BOUNDS[self]

    def log_interval(self, bits: int = 128) -> Interval:
        lo, hi = _TRANGE_LOG_BOUNDS[self]
        lo_iv = _log_3e12(bits) if lo is None else interval(lo, bits=bits)
        if hi is None:
            return _ray(lo_iv, bits)
        return Interval(lo_iv.lo, interval(hi, bits=bits).hi)

    @staticmethod
    def classify_log(log_t: Interval, bits: int = 128) -> "TRange":
        """Range containing the whole of log_t; raises if it straddles."""
        for rng in TRange:
            lo, hi = _TRANGE_LOG_BOUNDS[rng]
            lo_iv = _log_3e12(bits) if lo is None else interval(lo, bits=bits)
            if hi is None:
                if log_t.lo > lo_iv.hi:
                    return rng
                continue
            hi_iv = interval(hi, bits=bits)
            if log_t.lo > lo_iv.hi and log_t.hi <= hi_iv.lo:
                return rng
        raise RangeStraddle(
            f"log T = {log_t!r} does not sit inside a single height range"
        )


class RangeStraddle(IntervalError):
    """A height interval crosses a regime boundary; split it first."""


_TRANGE_LOG_BOUNDS: dict[TRange, tuple[Fraction | None, Fraction | None]] = {
    TRange.R1: (None, Fraction("46.2")),  # lower bound is log(3e12)
    TRange.R2: (Fraction("46.2"), Fraction("170.2")),
    TRange.R3: (Fraction("170.2"), Fraction(481958)),
    TRange.R4: (Fraction(481958), None),
}


def _ray(lo_iv: Interval, bits: int) -> Interval:
    from .interval import POS_INF

    return Interval(lo_iv.lo, POS_INF)


_LOG_3E12_CACHE: dict[int, Interval] = {}


def _log_3e12(bits: int) -> Interval:
    got = _LOG_3E12_CACHE.get(bits)
    if got is None:
        got = interval(3 * 10**12, bits=bits).ln()
        _LOG_3E12_CACHE[bits] = got
    return got


def log_3e12(bits: int = 128) -> Interval:
    """log(3*10^12), the height below which no off-line zero exists."""
    return _log_3e12(bits)


# ---------------------------------------------------------------------------
# zero-free regions
# ---------------------------------------------------------------------------

def j_function_log(log_t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """J = (1/6) log T + loglog T + log 0.618, for T > e."""
    bits = max(prec.bits, log_t.bits)
    if not log_t.lo > 1:
        raise DomainError("J needs T > e, i.e. log T > 1")
    return (
        log_t * Fraction(1, 6)
        + log_t.ln()
        + interval("0.618", bits=bits).ln()
    )


def j_function(t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    return j_function_log(t.ln(), prec)


def j_linear_majorant(log_t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """(1/4) log T + 1.8521, which dominates J for T >= 3."""
    bits = max(prec.bits, log_t.bits)
    return log_t * Fraction(1, 4) + interval("1.8521", bits=bits)


def zero_free_gap_log(
    region: ZeroFreeRegionId, log_t: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    """Width g of the zero-free strip sigma >= 1 - g at height T (T >= 3)."""
    bits = max(prec.bits, log_t.bits)
    if not log_t.lo > 1:
        raise DomainError("zero-free gaps need log T > 1 here (T >= 3)")
    if region is ZeroFreeRegionId.CLASSICAL:
        return 1 / (log_t * interval("5.558691", bits=bits))
    if region is ZeroFreeRegionId.INTERMEDIATE:
        j = j_function_log(log_t, prec)
        num = interval("0.04962", bits=bits) - interval("0.0196", bits=bits) / (
            j + interval("1.15", bits=bits)
        )
        den = j + interval("0.685", bits=bits) + interval("0.155", bits=bits) * log_t.ln()
        return num / den
    if region is ZeroFreeRegionId.LITTLEWOOD:
        return log_t.ln() / (log_t * interval("21.233", bits=bits))
    if region is ZeroFreeRegionId.KOROBOV_VINOGRADOV:
        den = (
            interval("53.989", bits=bits)
            * log_t.pow(Fraction(2, 3))
            * log_t.ln().pow(Fraction(1, 3))
        )
        return 1 / den
    raise DomainError(f"unknown region {region!r}")


def zero_free_gap(
    region: ZeroFreeRegionId, t: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    if not t.lo >= 3:
        raise DomainError("zero-free regions are stated for T >= 3")
    return zero_free_gap_log(region, t.ln(), prec)


def widest_region_log(
    log_t: Interval, prec: Precision = DEFAULT_PRECISION
) -> ZeroFreeRegionId:
    """Region whose gap certifiably dominates the other three on all of log_t."""
    gaps = {
        region: zero_free_gap_log(region, log_t, prec) for region in ZeroFreeRegionId
    }
    for region, gap in gaps.items():
        if all(
            gap.certainly_gt(other)
            for other_id, other in gaps.items()
            if other_id is not region
        ):
            return region
    raise InconclusiveComparison(
        "gap enclosures overlap at log T = "
        f"{log_t!r}: " + ", ".join(f"{r.value}={g!r}" for r, g in gaps.items())
    )


def widest_region(t: Interval, prec: Precision = DEFAULT_PRECISION) -> ZeroFreeRegionId:
    return widest_region_log(t.ln(), prec)


def active_gap_log(rng: TRange, log_t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """Gap of the region used inside the given height range."""
    region = {
        TRange.R1: ZeroFreeRegionId.CLASSICAL,
        TRange.R2: ZeroFreeRegionId.INTERMEDIATE,
        TRange.R3: ZeroFreeRegionId.LITTLEWOOD,
        TRange.R4: ZeroFreeRegionId.KOROBOV_VINOGRADOV,
    }[rng]
    return zero_free_gap_log(region, log_t, prec)


# ---------------------------------------------------------------------------
# zeta growth bound
# ---------------------------------------------------------------------------

def richert_m_log(
    alpha: Interval, log_t: Interval, prec: Precision = DEFAULT_PRECISION
) -> Interval:
    """A * T^{B (1-alpha)^{3/2}} * (log T)^{2/3} with T given as log T."""
    bits = max(prec.bits, alpha.bits, log_t.bits)
    if not (alpha.lo >= Fraction(1, 2) and alpha.hi <= 1):
        raise DomainError("alpha must lie in [1/2, 1]")
    if not log_t.lo > 1:
        raise DomainError("need T >= 3")
    one_minus = Interval.make(1, bits=bits) - alpha
    if one_minus.hi == 0:
        t_power = Interval.make(1, bits=bits)
    else:
        lifted = Interval(max(one_minus.lo, Interval.make(0, bits=bits).lo), one_minus.hi)
        expo = (
            interval(GROWTH_B, bits=bits)
            * _pow_nonneg(lifted, Fraction(3, 2), bits)
            * log_t
        )
        t_power = expo.exp()
    return interval(GROWTH_A, bits=bits) * t_power * log_t.pow(Fraction(2, 3))


def richert_m(alpha: Interval, t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    if not t.lo >= 3:
        raise DomainError("growth bound stated for T >= 3")
    return richert_m_log(alpha, t.ln(), prec)


def _pow_nonneg(x: Interval, q: Fraction, bits: int) -> Interval:
    """x^q for x >= 0 and q > 0, tolerating a zero lower endpoint."""
    if x.lo > 0:
        return x.pow(q)
    hi_pt = Interval(x.hi, x.hi)
    hi_val = hi_pt.pow(q) if x.hi > 0 else Interval.make(0, bits=bits)
    zero = Interval.make(0, bits=bits)
    return Interval(zero.lo, hi_val.hi)


# ---------------------------------------------------------------------------
# zero counting
# ---------------------------------------------------------------------------

def _nt_parts(t: Interval, prec: Precision) -> tuple[Interval, Interval]:
    bits = max(prec.bits, t.bits)
    e_ = Interval.make(1, bits=bits).exp()
    if not t.lo >= e_.lo:
        raise DomainError("zero-counting estimate needs T >= e")
    pi2 = const_pi(Precision(bits)) * 2
    main = (t / pi2) * (t / (pi2 * e_)).ln()
    log_t = t.ln()
    err = (
        interval(_NT_C1, bits=bits) * log_t
        + interval(_NT_C2, bits=bits) * log_t.ln()
        + interval(_NT_C3, bits=bits)
    )
    return main, err


def nt_upper(t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """Certified upper bound for the zero count N(T)."""
    main, err = _nt_parts(t, prec)
    return main + err


def nt_lower(t: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    main, err = _nt_parts(t, prec)
    return main - err


# ---------------------------------------------------------------------------
# Stirling envelope
# ---------------------------------------------------------------------------

def stirling_gamma_upper(
    sigma: Interval,
    t: Interval,
    z_abs: Interval,
    prec: Precision = DEFAULT_PRECISION,
) -> Interval:
    """(2 pi)^{1/2} |t|^{sigma - 1/2} exp(-pi |t| / 2 + 1 / (6 |z|)).

    ``z_abs`` must be a valid enclosure of |sigma + i t|, hence >= |t|.
    """
    bits = max(prec.bits, sigma.bits, t.bits)
    abs_t = abs(t)
    if not abs_t.lo > 0:
        raise DomainError("t must be bounded away from 0")
    if z_abs.hi < abs_t.lo:
        raise DomainError("|z| cannot be smaller than |t|")
    pi = const_pi(Precision(bits))
    half = Fraction(1, 2)
    power = abs_t.pow(sigma - half)
    expo = -(pi * abs_t * half) + 1 / (z_abs * 6)
    return (pi * 2).sqrt() * power * expo.exp()


# ---------------------------------------------------------------------------
# divisor-square summatory bound
# ---------------------------------------------------------------------------

def dsq_constants(bits: int) -> tuple[Interval, Interval, Interval, Interval]:
    pi = const_pi(Precision(bits))
    c1 = 1 / pi.ipow(2)
    c2 = interval(*_DSQ_C2, bits=bits)
    c3 = interval(*_DSQ_C3, bits=bits)
    c4 = interval(*_DSQ_C4, bits=bits)
    return c1, c2, c3, c4


def divisor_sum_band(x: Interval, prec: Precision = DEFAULT_PRECISION) -> tuple[Interval, Interval]:
    """(lower, upper) enclosures for sum_{n<=x} d(n)^2 from the explicit form."""
    bits = max(prec.bits, x.bits)
    if not x.lo >= 2:
        raise DomainError("divisor-square bound stated for x >= 2")
    c1, c2, c3, c4 = dsq_constants(bits)
    w = x.ln()
    main = x * (c1 * w.ipow(3) + c2 * w.ipow(2) + c3 * w + c4)
    err = interval(_DSQ_ERR_A, bits=bits) * x.pow(Fraction(3, 4)) * w + interval(
        _DSQ_ERR_B, bits=bits
    ) * x.sqrt()
    return main - err, main + err


def divisor_sum_upper(x: Interval, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """Certified upper bound for sum_{n<=x} d(n)^2."""
    return divisor_sum_band(x, prec)[1]


def simplified_divisor_bounds(x: int) -> list[tuple[Fraction, int]]:
    """(K, threshold) pairs with sum d(n)^2 <= K x log^3 x valid at this x."""
    table = [(Fraction(1, 4), 433), (Fraction(1), 7)]
    return [(k, x0) for k, x0 in table if x >= x0]
