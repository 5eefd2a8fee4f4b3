"""Pure-Python special-function kernels.

Reference implementation of the numeric core: log-gamma (Lanczos), digamma
(recurrence shift + asymptotic series), log-beta, the regularized incomplete
beta function I_x(a, b) via the continued-fraction expansion with the usual
symmetry switch, and the integrated Beta CDF in closed form.

The compiled module ``_kernels_c`` implements the same algorithms; the two are
interchangeable behind ``betadome.kernels``.
"""

import math

import numpy as np

from betadome.errors import ConvergenceError, DomainError

# Lanczos approximation, g = 7, n = 9 (classical double-precision coefficients).
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.9189385332046727417803297

_CF_MAX_ITER = 500
_CF_REL_TOL = 1e-15
_CF_TINY = 1e-300


def log_gamma(x):
    """ln Gamma(x) for x > 0 (Lanczos g=7 with reflection below 0.5)."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x < 0.5:
        # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEFFS[i] / (z + i)
    t = z + 7.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def digamma(x):
    """Psi(x) = d/dx ln Gamma(x) for x > 0.

    Recurrence-shifts the argument above 6, then applies the asymptotic
    (Bernoulli-number) series.
    """
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 6.0:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    # psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k x^{2k})
    series = inv2 * (
        1.0 / 12.0
        - inv2
        * (
            1.0 / 120.0
            - inv2
            * (
                1.0 / 252.0
                - inv2
                * (
                    1.0 / 240.0
                    - inv2
                    * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 * (1.0 / 12.0)))
                )
            )
        )
    )
    return acc + math.log(x) - 0.5 * inv - series


def log_beta(a, b):
    """ln B(a, b) for a, b > 0."""
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"log_beta requires finite a, b > 0, got ({a}, {b})")
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def _betacf(a, b, x):
    """Continued fraction for the incomplete beta function (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_REL_TOL:
            return h
    raise ConvergenceError(
        f"incomplete beta continued fraction hit the {_CF_MAX_ITER}-iteration cap "
        f"at x={x}, a={a}, b={b}"
    )


def _ix_from_bt(x, a, b, bt):
    """I_x(a, b) given bt = x^a (1-x)^b / B(a, b)."""
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def _bt(x, a, b, logbeta):
    return math.exp(a * math.log(x) + b * math.log1p(-x) - logbeta)


def reg_inc_beta(x, a, b):
    """Regularized incomplete beta function I_x(a, b), clamped to [0, 1]."""
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"reg_inc_beta requires finite a, b > 0, got ({a}, {b})")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"reg_inc_beta requires x in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    val = _ix_from_bt(x, a, b, _bt(x, a, b, log_beta(a, b)))
    return min(1.0, max(0.0, val))


def integrated_cdf_ab(x, a, b):
    """Y(x) = integral of the Beta(a, b) CDF from 0 to x, in closed form.

    Uses Y(x) = (x - m) I_x(a, b) + x^a (1-x)^b / ((a+b) B(a, b)) with
    m = a/(a+b), the one-evaluation reduction of the integration-by-parts
    identity Y(x) = x I_x(a, b) - m I_x(a+1, b).
    """
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integrated_cdf_ab requires finite a, b > 0, got ({a}, {b})")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"integrated_cdf_ab requires x in [0, 1], got {x}")
    m = a / (a + b)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0 - m
    bt = _bt(x, a, b, log_beta(a, b))
    y = (x - m) * _ix_from_bt(x, a, b, bt) + bt / (a + b)
    return max(0.0, y)


def reg_inc_beta_many(xs, a, b):
    """Vectorized I_x(a, b) over a 1-D float64 array of x values."""
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"reg_inc_beta_many requires finite a, b > 0, got ({a}, {b})")
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.empty_like(xs)
    logbeta = log_beta(a, b)
    for i, x in enumerate(xs):
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"reg_inc_beta_many requires x in [0, 1], got {x}")
        if x == 0.0:
            out[i] = 0.0
        elif x == 1.0:
            out[i] = 1.0
        else:
            val = _ix_from_bt(x, a, b, _bt(x, a, b, logbeta))
            out[i] = min(1.0, max(0.0, val))
    return out


def cdf_and_integrated_many(xs, a, b):
    """CDF values and integrated-CDF values of Beta(a, b) over an array of x.

    Shares one continued-fraction evaluation per point between the two outputs.
    """
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"cdf_and_integrated_many requires finite a, b > 0, got ({a}, {b})")
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    cdf = np.empty_like(xs)
    icdf = np.empty_like(xs)
    logbeta = log_beta(a, b)
    s = a + b
    m = a / s
    for i, x in enumerate(xs):
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"cdf_and_integrated_many requires x in [0, 1], got {x}")
        if x == 0.0:
            cdf[i] = 0.0
            icdf[i] = 0.0
        elif x == 1.0:
            cdf[i] = 1.0
            icdf[i] = 1.0 - m
        else:
            bt = _bt(x, a, b, logbeta)
            ix = _ix_from_bt(x, a, b, bt)
            cdf[i] = min(1.0, max(0.0, ix))
            icdf[i] = max(0.0, (x - m) * ix + bt / s)
    return cdf, icdf


def integrated_cdf_many(xs, a, b):
    """Vectorized integrated CDF of Beta(a, b) over an array of x values."""
    return cdf_and_integrated_many(xs, a, b)[1]


def laplace_series(a, b, s):
    """E[exp(-s X)] for X ~ Beta(a, b), exact via the confluent series.

    The transform is the Kummer function M(a, a+b, -s); for s > 0 the
    alternating series is replaced through M(a, c, -s) = exp(-s) M(c-a, c, s)
    by one with all-positive terms, so there is no cancellation for any shape
    pair or transform argument. Terms follow the ratio recurrence
    t_{k+1} = t_k (num+k) s / ((c+k)(k+1)) and the sum is rescaled before it
    can overflow; the tail is dropped once it falls below 1e-17 of the sum
    (valid only past k ~ s, where the terms have started decreasing).
    """
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"laplace_series requires finite a, b > 0, got ({a}, {b})")
    if not math.isfinite(s):
        raise DomainError(f"laplace_series requires finite s, got {s}")
    if s == 0.0:
        return 1.0
    if s > 0.0:
        num, z = b, s
    else:
        num, z = a, -s
    c = a + b
    term = 1.0
    total = 1.0
    log_scale = 0.0
    kmax = 500 + int(8.0 * z)
    for k in range(kmax):
        term *= (num + k) * z / ((c + k) * (k + 1.0))
        total += term
        if term <= total * 1e-17 and k >= z:
            break
        if total > 1e250:
            term *= 1e-250
            total *= 1e-250
            log_scale += 250.0 * math.log(10.0)
    else:
        raise ConvergenceError(
            f"laplace_series did not converge for a={a}, b={b}, s={s}"
        )
    if s > 0.0:
        # exp(-s) underflows alone near s ~ 745 even when exp(-s) * total
        # is representable, so recombine in log space past that point
        if log_scale == 0.0 and s < 700.0:
            return math.exp(-s) * total
        return math.exp(-s + log_scale + math.log(total))
    if log_scale == 0.0:
        return total
    return math.exp(log_scale + math.log(total))
