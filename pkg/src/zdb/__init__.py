"""zdb: certified interval verification of explicit zeta zero-density bounds.

The package re-derives, with outward-rounded interval arithmetic, every
numeric constant in an explicit zero-density estimate chain: zero-free region
widths, growth and zero-counting bounds, certified tail integrals, and the
full constant ledger, exposed through a registry of named checks and a small
CLI (``zdb``).
"""

from .bounds import (
    TRange,
    ZeroFreeRegionId,
    divisor_sum_band,
    divisor_sum_upper,
    j_function,
    nt_lower,
    nt_upper,
    richert_m,
    stirling_gamma_upper,
    widest_region,
    zero_free_gap,
)
from .density import (
    ingham_type_log,
    sigma_crossover,
    t_regime_boundary,
    three_term_bound_log,
    simple_bound_log,
    large_height_bound_log,
)
from .interval import (
    DivisionByZeroInterval,
    DomainError,
    Interval,
    IntervalError,
    Precision,
    const_e,
    const_pi,
    interval,
)
from .ledger import CheckResult, ParamBox, run_all, verify
from .quadrature import (
    TailIntegralSpec,
    finite_gamma_bound_integral,
    gamma_kernel_integral,
    tail_upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DivisionByZeroInterval",
    "DomainError",
    "Interval",
    "IntervalError",
    "ParamBox",
    "Precision",
    "TailIntegralSpec",
    "TRange",
    "ZeroFreeRegionId",
    "const_e",
    "const_pi",
    "divisor_sum_band",
    "divisor_sum_upper",
    "finite_gamma_bound_integral",
    "gamma_kernel_integral",
    "ingham_type_log",
    "interval",
    "j_function",
    "nt_lower",
    "nt_upper",
    "richert_m",
    "run_all",
    "sigma_crossover",
    "stirling_gamma_upper",
    "t_regime_boundary",
    "tail_upper_bound",
    "three_term_bound_log",
    "simple_bound_log",
    "large_height_bound_log",
    "verify",
    "widest_region",
    "zero_free_gap",
]
