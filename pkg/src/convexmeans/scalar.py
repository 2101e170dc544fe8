"""Power means of positive scalars over the extended reals.

Exponents are plain floats; ``-math.inf`` and ``math.inf`` select the minimum
and maximum, ``0.0`` the geometric mean.  Exponents and arguments may be
floats or numpy arrays, broadcast elementwise.
"""

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "check_exponent",
    "power_mean",
    "mean_quotient",
    "iteration_rate",
    "iteration_rate_excess",
]


def check_exponent(p):
    p = float(p)
    if math.isnan(p):
        raise DomainError("exponent must not be NaN")
    return p


def _check_args(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(np.isnan(a)) or np.any(np.isnan(b)):
        raise DomainError("power mean arguments must not be NaN")
    if np.any(a <= 0) or np.any(b <= 0):
        raise DomainError("power mean arguments must be strictly positive")
    if np.any(np.isinf(a) != np.isinf(b)):
        raise DomainError("mixed finite and infinite arguments")
    return a, b


def power_mean(p, a, b):
    """Return m_p(a, b) = ((a^p + b^p) / 2)^(1/p) with the limiting cases.

    For finite ``p != 0`` the value is evaluated as ``M * ((1 + r^p) / 2)^(1/p)``
    where ``M`` is the dominant argument and ``r`` the ratio of the other one
    to it, so ``r^p <= 1`` never overflows.  ``p`` may also be an array; it is
    broadcast against ``a`` and ``b``.
    """
    if np.ndim(p) == 0:
        p = check_exponent(p)
    else:
        p = np.asarray(p, dtype=float)
        if np.any(np.isnan(p)):
            raise DomainError("exponent must not be NaN")
    a, b = _check_args(a, b)
    scalar = np.ndim(p) == 0 and a.ndim == 0 and b.ndim == 0
    p, a, b = np.broadcast_arrays(p, a, b)
    out = np.full(a.shape, math.inf)
    fin = ~np.isinf(a)
    p, af, bf = p[fin], a[fin], b[fin]
    lo, hi = np.minimum(af, bf), np.maximum(af, bf)
    res = np.empty(af.shape)
    pick = p == -math.inf
    res[pick] = lo[pick]
    pick = p == math.inf
    res[pick] = hi[pick]
    pick = p == 0.0
    res[pick] = np.sqrt(af[pick]) * np.sqrt(bf[pick])
    pick = np.isfinite(p) & (p != 0.0)
    if np.any(pick):
        q = p[pick]
        big = np.where(q > 0, hi[pick], lo[pick])
        other = np.where(q > 0, lo[pick], hi[pick])
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            ratio = other / big
            log_ratio = np.where(np.isfinite(ratio) & (ratio >= np.finfo(float).tiny),
                                 np.log(ratio), np.log(other) - np.log(big))
        # log((1 + r^p)/2) with r^p - 1 taken from expm1 to stay accurate as p -> 0
        x = q * log_ratio
        with np.errstate(over="ignore", under="ignore"):
            log_mean = np.log1p(np.expm1(x) / 2.0) / q
        # near x = 0 (and for subnormal x, where expm1 keeps few bits) use the series
        # log((1 + e^x)/2) = x/2 + x^2/8 - x^4/192 + O(x^6)
        near = np.abs(x) < 1e-3
        log_mean[near] = log_ratio[near] * (0.5 + x[near] / 8.0 - x[near] ** 3 / 192.0)
        res[pick] = big * np.exp(log_mean)
    # m_p lies between min and max; clip the last-ulp excursions
    out[fin] = np.clip(res, lo, hi)
    if scalar:
        return float(out)
    return out


def mean_quotient(p, q, alpha):
    """Return m_q(alpha, 1) / m_p(alpha, 1)."""
    alpha = np.asarray(alpha, dtype=float)
    if np.any(~(alpha > 0)) or np.any(np.isinf(alpha)):
        raise DomainError("alpha must be a positive real")
    res = power_mean(q, alpha, 1.0) / power_mean(p, alpha, 1.0)
    if np.ndim(res) == 0:
        return float(res)
    return res


def iteration_rate_excess(p, r0max, i):
    """Return R_p(i) - 1 without cancellation.

    R_p(i) is m_|p| applied i times to (r0max, 1):
    ``(1 + (r0max^|p| - 1) / 2^i)^(1/|p|)`` for p != 0 and ``r0max^(1/2^i)`` for p = 0.
    """
    p = check_exponent(p)
    if math.isinf(p):
        raise DomainError("iteration rate requires a finite exponent")
    r0max = float(r0max)
    if not r0max >= 1.0:
        raise DomainError("r0max must be >= 1")
    i = int(i)
    if i < 0:
        raise DomainError("iteration count must be nonnegative")
    log_r = math.log(r0max)
    if p == 0.0:
        return math.expm1(math.ldexp(log_r, -i))
    ap = abs(p)
    inner = math.ldexp(math.expm1(ap * log_r), -i)
    return math.expm1(math.log1p(inner) / ap)


def iteration_rate(p, r0max, i):
    """Return R_p(i), the certified bound on the covering-radius gap after i steps."""
    return 1.0 + iteration_rate_excess(p, r0max, i)
