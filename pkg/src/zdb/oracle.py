"""Independent brute-force references used to audit the certified modules.

Nothing here goes through the interval module's code paths: divisor sums are
exact integer sieves, the gamma reference runs on mpmath with a hand-derived
remainder bound, and the large-values inequality checks are plain numpy.
Agreement between these and the certified evaluators is evidence, not
tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .interval import DEFAULT_PRECISION, DomainError, Interval, Precision

__all__ = [
    "CapExceeded",
    "HMInstance",
    "PoleError",
    "divisor_count_sieve",
    "divisor_sum_bruteforce",
    "divisor_sum_pair_count",
    "gamma_reference",
    "hm_test",
    "make_hm_instance",
    "mobius_sieve",
    "mollifier_coeff",
]

_DIVISOR_CAP = 10**8
_MOLLIFIER_CAP = 10**8


class CapExceeded(ValueError):
    """Argument beyond the desk-scale cap for brute force."""


class PoleError(ValueError):
    """Gamma evaluated at a nonpositive integer."""


# ---------------------------------------------------------------------------
# divisor machinery
# ---------------------------------------------------------------------------

def divisor_count_sieve(x: int) -> np.ndarray:
    """d(n) for n = 0..x (d(0) set to 0) by the harmonic sieve."""
    if x < 1:
        raise ValueError("need x >= 1")
    if x > _DIVISOR_CAP:
        raise CapExceeded(f"x = {x} beyond cap {_DIVISOR_CAP}")
    d = np.zeros(x + 1, dtype=np.int32)
    for i in range(1, x + 1):
        d[i::i] += 1
    return d


def divisor_sum_bruteforce(x: int) -> int:
    """Exact sum_{n<=x} d(n)^2."""
    if x < 2:
        raise ValueError("need x >= 2")
    d = divisor_count_sieve(x).astype(np.int64)
    return int(np.dot(d[1:], d[1:]))


def divisor_sum_prefix(x: int) -> np.ndarray:
    """Prefix sums S[k] = sum_{n<=k} d(n)^2 for k = 0..x (int64)."""
    d = divisor_count_sieve(x).astype(np.int64)
    return np.cumsum(d * d)


def divisor_sum_pair_count(x: int) -> int:
    """sum d(n)^2 as the number of quadruples (a,b,c,d) with ab = cd <= x.

    Counts multiplication-table multiplicities and sums their squares; this
    never looks at a divisor-count sieve, so it is an independent check.
    """
    if x > 10**5:
        raise CapExceeded("pair counting is quadratic-ish; keep x <= 1e5")
    counts = np.zeros(x + 1, dtype=np.int64)
    for a in range(1, x + 1):
        prods = np.arange(a, x + 1, a)
        counts[prods] += 1
    return int(np.dot(counts, counts))


def mobius_sieve(x: int) -> np.ndarray:
    """mu(n) for n = 0..x."""
    if x > _DIVISOR_CAP:
        raise CapExceeded(f"x = {x} beyond cap {_DIVISOR_CAP}")
    mu = np.ones(x + 1, dtype=np.int8)
    mu[0] = 0
    prime = np.ones(x + 1, dtype=bool)
    prime[:2] = False
    for p in range(2, x + 1):
        if prime[p]:
            prime[2 * p :: p] = False
            mu[p::p] *= -1
            sq = p * p
            if sq <= x:
                mu[sq::sq] = 0
    return mu


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def mollifier_coeff(n: int, x_cut: int) -> int:
    """a(n) = sum of mu(d) over divisors d <= x_cut of n."""
    if not 1 <= n <= _MOLLIFIER_CAP:
        raise CapExceeded(f"n = {n} outside [1, {_MOLLIFIER_CAP}]")
    if x_cut < 1:
        raise ValueError("cutoff must be >= 1")
    primes = [p for p, _ in _factorize(n)]
    total = 0
    # mu vanishes off squarefree divisors; walk subsets of the prime set
    stack = [(0, 1, 1)]
    while stack:
        idx, prod, sign = stack.pop()
        if idx == len(primes):
            if prod <= x_cut:
                total += sign
            continue
        stack.append((idx + 1, prod, sign))
        stack.append((idx + 1, prod * primes[idx], -sign))
    return total


# ---------------------------------------------------------------------------
# |Gamma| reference with explicit remainder
# ---------------------------------------------------------------------------

def gamma_reference(sigma, t, prec: Precision = DEFAULT_PRECISION) -> Interval:
    """Certified enclosure of |Gamma(sigma + i t)|.

    Recurses |Gamma(z)| = |Gamma(z+k)| / prod |z+j| upward until the shifted
    argument w satisfies Re w >= max(30, |t|, 0.8*bits) so the asymptotic
    series for log Gamma applies with |arg w| <= pi/4, then evaluates the
    series with the classical error bound

        |R_n| <= |B_{2n+2}| / ((2n+1)(2n+2) |w|^{2n+1}) * sec(arg w / 2)^{2n+2}

    and pads the result by the remainder plus a generous allowance for the
    mpmath rounding noise (the computation runs with 80 guard bits; a few
    hundred operations cannot consume them).
    """
    bits = prec.bits
    with mpmath.workprec(bits + 80):
        z_re = mpmath.mpmathify(sigma)
        z_im = mpmath.mpmathify(t)
        if z_im == 0 and z_re <= 0 and z_re == int(z_re):
            raise PoleError(f"Gamma pole at {z_re}")
        if abs(z_im) > 10**3:
            raise DomainError("reference implemented for |t| <= 1e3")
        target_re = max(30, int(abs(z_im)) + 1, int(0.8 * bits))
        k = max(0, int(mpmath.ceil(target_re - z_re)))
        w_re, w_im = z_re + k, z_im
        # product of |z + j| for j < k
        log_prod = mpmath.mpf(0)
        for j in range(k):
            m2 = (z_re + j) ** 2 + z_im**2
            if m2 == 0:
                raise PoleError("recursion crossed a pole")
            log_prod += mpmath.log(m2) / 2
        w = mpmath.mpc(w_re, w_im)
        n_terms = max(8, bits // 4)
        series = (w - mpmath.mpf(1) / 2) * mpmath.log(w) - w + mpmath.log(2 * mpmath.pi) / 2
        w_pow = w
        for j in range(1, n_terms + 1):
            b2j = mpmath.bernoulli(2 * j)
            series += b2j / ((2 * j - 1) * (2 * j) * w_pow)
            w_pow *= w * w
        abs_w = mpmath.sqrt(w_re**2 + w_im**2)
        b_next = abs(mpmath.bernoulli(2 * n_terms + 2))
        # |arg w| <= pi/4 by construction, so sec(arg/2) <= sec(pi/8) < 1.0824
        sec_factor = mpmath.mpf("1.0824") ** (2 * n_terms + 2)
        remainder = b_next / ((2 * n_terms + 1) * (2 * n_terms + 2) * abs_w ** (2 * n_terms + 1))
        remainder *= sec_factor
        log_abs = series.real - log_prod
        val = mpmath.exp(log_abs)
        # remainder acts on log|Gamma|; rounding allowance 2^-(bits+30)
        slack = val * (mpmath.exp(remainder + mpmath.mpf(2) ** (-(bits + 30))) - 1)
        lo_frac = _mpf_to_fraction(val - slack)
        hi_frac = _mpf_to_fraction(val + slack)
    lo_iv = Interval.make(lo_frac, bits=bits)
    hi_iv = Interval.make(hi_frac, bits=bits)
    return Interval(lo_iv.lo, hi_iv.hi)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(int(man), 1) * (Fraction(2) ** int(exp))
    return -value if sign else value


# ---------------------------------------------------------------------------
# large-values (Halasz-Montgomery type) inequality instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HMInstance:
    R: int
    dim: int
    xi: np.ndarray
    phis: np.ndarray  # shape (R, dim)
    seed: int

    def scaled(self, factor: float) -> "HMInstance":
        return HMInstance(self.R, self.dim, self.xi * factor, self.phis, self.seed)


def make_hm_instance(seed: int, R: int | None = None, dim: int | None = None) -> HMInstance:
    """Seed-deterministic random instance, components uniform on [-1,1]^2."""
    rng = np.random.default_rng(seed)
    r = R if R is not None else int(rng.integers(1, 9))
    d = dim if dim is not None else int(rng.integers(1, 9))
    def cvec(n):
        return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
    return HMInstance(r, d, cvec(d), np.array([cvec(d) for _ in range(r)]), seed)


def hm_test(instance: HMInstance) -> dict:
    """Evaluate the two large-values inequalities on one instance.

    Inequality 1:  sum_r |(xi, phi_r)| <= ||xi|| (sum_{r,s} |(phi_r, phi_s)|)^{1/2}.
    Inequality 2 is evaluated in the scale-invariant squared form
    sum_r |(xi, phi_r)|^2 <= ||xi||^2 max_r sum_s |(phi_r, phi_s)|, and the
    as-printed unsquared left side is also reported so callers can exhibit
    the scaling violation of the printed variant.
    """
    xi, phis = instance.xi, instance.phis
    inner = phis @ np.conjugate(xi)
    lhs1 = float(np.abs(inner).sum())
    gram = np.abs(phis @ np.conjugate(phis.T))
    norm_xi = float(np.linalg.norm(xi))
    rhs1 = norm_xi * float(np.sqrt(gram.sum()))
    lhs2_squared = float((np.abs(inner) ** 2).sum())
    rhs2 = norm_xi**2 * float(gram.sum(axis=1).max())
    eps = 1e-9 * (1 + abs(rhs1) + abs(rhs2))
    return {
        "lhs1": lhs1,
        "rhs1": rhs1,
        "holds1": lhs1 <= rhs1 + eps,
        "lhs2_squared": lhs2_squared,
        "rhs2": rhs2,
        "holds2": lhs2_squared <= rhs2 + eps,
        "printed_lhs2": lhs1,
        "printed_holds2": lhs1 <= rhs2 + eps,
    }
