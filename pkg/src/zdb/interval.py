"""Outward-rounded interval arithmetic over MPFR floats.

Every quantity computed by this package flows through :class:`Interval`:
a pair ``[lo, hi]`` of binary floats with ``lo <= hi``, never NaN, where
endpoint arithmetic is performed with directed rounding (lo rounded toward
-inf, hi toward +inf).  Enclosures are therefore conservative: if ``x in X``
and ``y in Y`` then ``x op y in X op Y``.

Endpoints may be ``+/-inf`` so that one-sided ranges like ``[L, inf)`` can be
evaluated directly; an infinite endpoint means "unbounded on that side", it is
never a member of the enclosed set.

Precision is data, not ambient state: endpoints carry their MPFR precision
and operations round at the largest operand precision, so a computation
started from 128-bit inputs stays 128-bit without any global configuration.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

import gmpy2

__all__ = [
    "DEFAULT_BITS",
    "DivisionByZeroInterval",
    "DomainError",
    "Interval",
    "IntervalError",
    "Precision",
    "add",
    "const_e",
    "const_pi",
    "div",
    "exp",
    "hull",
    "interval",
    "ln",
    "mul",
    "pow_",
    "sqrt",
    "sub",
]

DEFAULT_BITS = 128

_EMIN = gmpy2.get_emin_min()
_EMAX = gmpy2.get_emax_max()

# Rounding-mode keyed context cache.  Contexts are only ever used through
# their op methods; the status flags they accumulate are never read.
_CTX_CACHE: dict[tuple[int, object], object] = {}


class IntervalError(ValueError):
    """Base class for interval arithmetic failures."""


class DomainError(IntervalError):
    """Operand lies outside the mathematical domain of the operation."""


class DivisionByZeroInterval(IntervalError):
    """Divisor interval contains zero."""


class Precision:
    """Working precision: mantissa bits plus a subdivision budget.

    ``max_subdivisions`` caps branch-and-bound and bisection work; it is
    consumed by the ledger, not by plain arithmetic.
    """

    __slots__ = ("bits", "max_subdivisions")

    def __init__(self, bits: int = DEFAULT_BITS, max_subdivisions: int = 10**6):
        if bits < 53:
            raise ValueError("precision must be at least 53 bits")
        if max_subdivisions < 1:
            raise ValueError("max_subdivisions must be positive")
        object.__setattr__(self, "bits", int(bits))
        object.__setattr__(self, "max_subdivisions", int(max_subdivisions))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Precision is immutable")

    def __repr__(self):
        return f"Precision(bits={self.bits}, max_subdivisions={self.max_subdivisions})"

    def __eq__(self, other):
        return (
            isinstance(other, Precision)
            and self.bits == other.bits
            and self.max_subdivisions == other.max_subdivisions
        )

    def __hash__(self):
        return hash((self.bits, self.max_subdivisions))


DEFAULT_PRECISION = Precision()


def _ctx(bits: int, mode) -> object:
    key = (bits, mode)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = gmpy2.context(
            precision=bits,
            round=mode,
            emin=_EMIN,
            emax=_EMAX,
            trap_overflow=False,
            trap_underflow=False,
            trap_inexact=False,
            trap_invalid=False,
            trap_erange=False,
            trap_divzero=False,
        )
        _CTX_CACHE[key] = ctx
    return ctx


def _down(bits: int):
    return _ctx(bits, gmpy2.RoundDown)


def _up(bits: int):
    return _ctx(bits, gmpy2.RoundUp)


_Scalar = Union[int, Fraction, str, "Interval"]


def _to_mpfr_pair(value, bits: int):
    """Exact or outward-rounded (lo, hi) endpoints for a scalar."""
    if isinstance(value, bool):
        raise TypeError("bool is not a valid interval endpoint")
    if isinstance(value, int):
        lo = gmpy2.mpfr(value, precision=max(bits, value.bit_length() + 2))
        return lo, lo
    if isinstance(value, str):
        return (
            gmpy2.mpfr(value, precision=bits, context=_down(bits)),
            gmpy2.mpfr(value, precision=bits, context=_up(bits)),
        )
    if isinstance(value, Fraction):
        np_ = max(bits, value.numerator.bit_length() + 2)
        dp_ = max(bits, value.denominator.bit_length() + 2)
        num = gmpy2.mpfr(value.numerator, precision=np_)
        den = gmpy2.mpfr(value.denominator, precision=dp_)
        return _down(bits).div(num, den), _up(bits).div(num, den)
    if isinstance(value, type(gmpy2.mpfr(0))):
        return value, value
    if isinstance(value, type(gmpy2.mpz(0))):
        v = int(value)
        exact = gmpy2.mpfr(v, precision=max(bits, v.bit_length() + 2))
        return exact, exact
    if isinstance(value, float):
        raise TypeError(
            "refusing implicit float endpoint; use a decimal string, int or Fraction"
        )
    raise TypeError(f"cannot build interval endpoint from {type(value)!r}")


class Interval:
    """Closed interval [lo, hi] of extended reals; immutable."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        if gmpy2.is_nan(lo) or gmpy2.is_nan(hi):
            raise IntervalError("NaN endpoint")
        if not lo <= hi:
            raise IntervalError(f"inverted interval: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Interval is immutable")

    # -- construction helpers -------------------------------------------

    @staticmethod
    def make(lo: _Scalar, hi: _Scalar | None = None, bits: int = DEFAULT_BITS) -> "Interval":
        lo_pair = _to_mpfr_pair(lo, bits)
        hi_pair = lo_pair if hi is None else _to_mpfr_pair(hi, bits)
        return Interval(lo_pair[0], hi_pair[1])

    @staticmethod
    def from_float(x: float, bits: int = DEFAULT_BITS) -> "Interval":
        v = gmpy2.mpfr(x, precision=max(bits, 53))
        return Interval(v, v)

    # -- basic queries ----------------------------------------------------

    @property
    def bits(self) -> int:
        return max(self.lo.precision, self.hi.precision)

    def is_finite(self) -> bool:
        return gmpy2.is_finite(self.lo) and gmpy2.is_finite(self.hi)

    def is_point(self) -> bool:
        return self.lo == self.hi

    def width(self) -> "Interval":
        b = self.bits
        return Interval(gmpy2.mpfr(0), _up(b).sub(self.hi, self.lo))

    def midpoint(self):
        b = self.bits
        if gmpy2.is_infinite(self.lo) and gmpy2.is_infinite(self.hi):
            return gmpy2.mpfr(0)
        if gmpy2.is_infinite(self.lo):
            return gmpy2.mpfr(self.hi) - 1
        if gmpy2.is_infinite(self.hi):
            return gmpy2.mpfr(self.lo) + 1
        return _down(b).div(_down(b).add(self.lo, self.hi), gmpy2.mpfr(2))

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, (int, Fraction)):
            q = gmpy2.mpq(x.numerator if isinstance(x, Fraction) else x,
                          x.denominator if isinstance(x, Fraction) else 1)
            return self.lo <= q <= self.hi
        return self.lo <= x <= self.hi

    def is_subset_of(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    # Certified order relations: true only when every point pair satisfies it.
    def certainly_le(self, other) -> bool:
        return self.hi <= _as_interval(other, self.bits).lo

    def certainly_lt(self, other) -> bool:
        return self.hi < _as_interval(other, self.bits).lo

    def certainly_ge(self, other) -> bool:
        return self.lo >= _as_interval(other, self.bits).hi

    def certainly_gt(self, other) -> bool:
        return self.lo > _as_interval(other, self.bits).hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise IntervalError("empty intersection")
        return Interval(lo, hi)

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.midpoint()
        return Interval(self.lo, m), Interval(m, self.hi)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _as_interval(other, self.bits)
        b = max(self.bits, o.bits)
        return Interval(_down(b).add(self.lo, o.lo), _up(b).add(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_interval(other, self.bits)
        b = max(self.bits, o.bits)
        return Interval(_down(b).sub(self.lo, o.hi), _up(b).sub(self.hi, o.lo))

    def __rsub__(self, other):
        return _as_interval(other, self.bits).__sub__(self)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        o = _as_interval(other, self.bits)
        b = max(self.bits, o.bits)
        dn, up = _down(b), _up(b)
        lo = min(
            _ep_mul(dn, self.lo, o.lo), _ep_mul(dn, self.lo, o.hi),
            _ep_mul(dn, self.hi, o.lo), _ep_mul(dn, self.hi, o.hi),
        )
        hi = max(
            _ep_mul(up, self.lo, o.lo), _ep_mul(up, self.lo, o.hi),
            _ep_mul(up, self.hi, o.lo), _ep_mul(up, self.hi, o.hi),
        )
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_interval(other, self.bits)
        if o.lo <= 0 <= o.hi:
            raise DivisionByZeroInterval(f"divisor {o!r} contains zero")
        return self * o._reciprocal()

    def __rtruediv__(self, other):
        return _as_interval(other, self.bits).__truediv__(self)

    def _reciprocal(self) -> "Interval":
        b = self.bits
        one = gmpy2.mpfr(1)
        # endpoints have a fixed sign here; 1/inf rounds to 0 correctly
        return Interval(_down(b).div(one, self.hi), _up(b).div(one, self.lo))

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(gmpy2.mpfr(0), max(-self.lo, self.hi))

    def exp(self) -> "Interval":
        b = self.bits
        return Interval(_down(b).exp(self.lo), _up(b).exp(self.hi))

    def ln(self) -> "Interval":
        if not self.lo > 0:
            raise DomainError(f"ln needs a strictly positive interval, got {self!r}")
        b = self.bits
        return Interval(_down(b).log(self.lo), _up(b).log(self.hi))

    def sqrt(self) -> "Interval":
        if not self.lo > 0:
            raise DomainError(f"sqrt needs a strictly positive interval, got {self!r}")
        b = self.bits
        return Interval(_down(b).sqrt(self.lo), _up(b).sqrt(self.hi))

    def pow(self, exponent) -> "Interval":
        """a**b as exp(b * ln a); requires a > 0."""
        if not self.lo > 0:
            raise DomainError(f"pow base must be strictly positive, got {self!r}")
        e = _as_interval(exponent, self.bits)
        if self.lo == self.hi == 1:
            return Interval.make(1, bits=self.bits)
        return (e * self.ln()).exp()

    def __pow__(self, exponent):
        if isinstance(exponent, int):
            return self.ipow(exponent)
        return self.pow(exponent)

    def ipow(self, n: int) -> "Interval":
        """Integer power by monotone endpoint analysis (tighter than exp/ln)."""
        if n == 0:
            return Interval.make(1, bits=self.bits)
        if n < 0:
            return Interval.make(1, bits=self.bits) / self.ipow(-n)
        b = self.bits
        lo_pows = (_ep_pow(_down(b), self.lo, n), _ep_pow(_down(b), self.hi, n))
        hi_pows = (_ep_pow(_up(b), self.lo, n), _ep_pow(_up(b), self.hi, n))
        lo, hi = min(lo_pows), max(hi_pows)
        if n % 2 == 0 and self.lo < 0 < self.hi:
            lo = gmpy2.mpfr(0)
        return Interval(lo, hi)

    # -- output -----------------------------------------------------------

    def lower_decimal(self, digits: int = 40) -> str:
        return _decimal_str(self.lo, digits, toward_up=False)

    def upper_decimal(self, digits: int = 40) -> str:
        return _decimal_str(self.hi, digits, toward_up=True)

    def __repr__(self):
        return f"[{self.lower_decimal(25)}, {self.upper_decimal(25)}]"

    def __eq__(self, other):
        return (
            isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi
        )

    def __hash__(self):
        return hash((str(self.lo), str(self.hi)))


def _as_interval(x, bits: int) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.make(x, bits=bits)


def _ep_mul(ctx, x, y):
    # 0 * inf at an endpoint means "0 times some huge finite number": 0.
    if x == 0 or y == 0:
        return gmpy2.mpfr(0)
    return ctx.mul(x, y)


def _ep_pow(ctx, x, n: int):
    if x == 0:
        return gmpy2.mpfr(0)
    r = gmpy2.mpfr(1)
    base = x
    e = n
    while e:
        if e & 1:
            r = ctx.mul(r, base)
        e >>= 1
        if e:
            base = ctx.mul(base, base)
    return r


def _decimal_str(x, digits: int, toward_up: bool) -> str:
    """Exact directed decimal rendering of an MPFR value."""
    if gmpy2.is_infinite(x):
        return "inf" if x > 0 else "-inf"
    if x == 0:
        return "0"
    num, den = x.as_integer_ratio()
    num, den = int(num), int(den)
    neg = num < 0
    if neg:
        num = -num
    # scale to `digits` significant figures
    mag = len(str(num)) - len(str(den))  # rough decimal magnitude
    exp10 = digits - mag
    if exp10 >= 0:
        scaled_num, scaled_den = num * 10**exp10, den
    else:
        scaled_num, scaled_den = num, den * 10**(-exp10)
    q, r = divmod(scaled_num, scaled_den)
    round_up_mag = (toward_up and not neg) or (not toward_up and neg)
    if r and round_up_mag:
        q += 1
    s = str(q)
    point = len(s) - exp10
    mantissa = s[0] + "." + (s[1:] or "0")
    e = point - 1
    return f"{'-' if neg else ''}{mantissa}e{e:+d}"


# ---------------------------------------------------------------------------
# Functional surface
# ---------------------------------------------------------------------------

def interval(lo: _Scalar, hi: _Scalar | None = None, bits: int = DEFAULT_BITS) -> Interval:
    """Build an outward-rounded interval from ints, Fractions or decimal strings."""
    return Interval.make(lo, hi, bits=bits)


def add(a: Interval, b: Interval) -> Interval:
    return a + b


def sub(a: Interval, b: Interval) -> Interval:
    return a - b


def mul(a: Interval, b: Interval) -> Interval:
    return a * b


def div(a: Interval, b: Interval) -> Interval:
    return a / b


def exp(a: Interval) -> Interval:
    return a.exp()


def ln(a: Interval) -> Interval:
    return a.ln()


def sqrt(a: Interval) -> Interval:
    return a.sqrt()


def pow_(a: Interval, b) -> Interval:
    return a.pow(b)


def const_pi(prec: Precision = DEFAULT_PRECISION) -> Interval:
    b = prec.bits
    return Interval(_down(b).const_pi(), _up(b).const_pi())


def const_e(prec: Precision = DEFAULT_PRECISION) -> Interval:
    b = prec.bits
    one = gmpy2.mpfr(1)
    return Interval(_down(b).exp(one), _up(b).exp(one))


def hull(items: Iterable[Interval]) -> Interval:
    items = list(items)
    if not items:
        raise IntervalError("hull of no intervals")
    return Interval(min(i.lo for i in items), max(i.hi for i in items))


def max_interval(items: Iterable[Interval]) -> Interval:
    """Enclosure of max(x_1..x_n) with x_i ranging over the operands."""
    items = list(items)
    return Interval(max(i.lo for i in items), max(i.hi for i in items))


def min_interval(items: Iterable[Interval]) -> Interval:
    items = list(items)
    return Interval(min(i.lo for i in items), min(i.hi for i in items))


POS_INF = gmpy2.mpfr("inf")
NEG_INF = gmpy2.mpfr("-inf")


def upper_ray(lo: _Scalar, bits: int = DEFAULT_BITS) -> Interval:
    """[lo, +inf): the whole tail above lo."""
    lo_pair = _to_mpfr_pair(lo, bits)
    return Interval(lo_pair[0], POS_INF)
