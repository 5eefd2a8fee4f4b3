# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled special-function kernels.

Cython translation of ``_kernels_py`` — same algorithms (Lanczos log-gamma,
shifted-series digamma, continued-fraction incomplete beta, closed-form
integrated CDF), compiled for the hot loops of the dominance comparator and
the dome sweep.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, isfinite, isnan, log, log1p, sin, NAN

from betadome.errors import ConvergenceError, DomainError

cnp.import_array()

cdef double _HALF_LOG_TWO_PI = 0.9189385332046727417803297
cdef double _PI = 3.141592653589793238462643
cdef int _CF_MAX_ITER = 500
cdef double _CF_REL_TOL = 1e-15
cdef double _CF_TINY = 1e-300

cdef double[9] _LANCZOS_COEFFS
_LANCZOS_COEFFS[0] = 0.99999999999980993
_LANCZOS_COEFFS[1] = 676.5203681218851
_LANCZOS_COEFFS[2] = -1259.1392167224028
_LANCZOS_COEFFS[3] = 771.32342877765313
_LANCZOS_COEFFS[4] = -176.61502916214059
_LANCZOS_COEFFS[5] = 12.507343278686905
_LANCZOS_COEFFS[6] = -0.13857109526572012
_LANCZOS_COEFFS[7] = 9.9843695780195716e-6
_LANCZOS_COEFFS[8] = 1.5056327351493116e-7


cdef double _log_gamma(double x) noexcept nogil:
    cdef double z, acc, t
    cdef int i
    if x < 0.5:
        return log(_PI / sin(_PI * x)) - _log_gamma(1.0 - x)
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEFFS[i] / (z + i)
    t = z + 7.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * log(t) - t + log(acc)


cdef double _digamma(double x) noexcept nogil:
    cdef double acc = 0.0
    cdef double inv, inv2, series
    while x < 6.0:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
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
    return acc + log(x) - 0.5 * inv - series


cdef double _log_beta(double a, double b) noexcept nogil:
    return _log_gamma(a) + _log_gamma(b) - _log_gamma(a + b)


cdef double _betacf(double a, double b, double x) noexcept nogil:
    """Modified-Lentz continued fraction; NaN signals cap exhaustion."""
    cdef double qab = a + b
    cdef double qap = a + 1.0
    cdef double qam = a - 1.0
    cdef double c = 1.0
    cdef double d = 1.0 - qab * x / qap
    cdef double h, aa, delta
    cdef int m, m2
    if fabs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if fabs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if fabs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if fabs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if fabs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < _CF_REL_TOL:
            return h
    return NAN


cdef double _ix_from_bt(double x, double a, double b, double bt) noexcept nogil:
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


cdef double _bt(double x, double a, double b, double logbeta) noexcept nogil:
    return exp(a * log(x) + b * log1p(-x) - logbeta)


cdef inline double _clamp01(double v) noexcept nogil:
    if v < 0.0:
        return 0.0
    if v > 1.0:
        return 1.0
    return v


cdef int _check_shape(double a, double b, str who) except -1:
    if not (a > 0.0 and b > 0.0 and isfinite(a) and isfinite(b)):
        raise DomainError(f"{who} requires finite a, b > 0, got ({a}, {b})")
    return 0


cdef int _check_x(double x, str who) except -1:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{who} requires x in [0, 1], got {x}")
    return 0


cdef int _check_converged(double v, double x, double a, double b) except -1:
    if isnan(v):
        raise ConvergenceError(
            f"incomplete beta continued fraction hit the {_CF_MAX_ITER}-iteration cap "
            f"at x={x}, a={a}, b={b}"
        )
    return 0


def log_gamma(double x):
    """ln Gamma(x) for x > 0 (Lanczos g=7 with reflection below 0.5)."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return _log_gamma(x)


def digamma(double x):
    """Psi(x) = d/dx ln Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    return _digamma(x)


def log_beta(double a, double b):
    """ln B(a, b) for a, b > 0."""
    _check_shape(a, b, "log_beta")
    return _log_beta(a, b)


def reg_inc_beta(double x, double a, double b):
    """Regularized incomplete beta function I_x(a, b), clamped to [0, 1]."""
    _check_shape(a, b, "reg_inc_beta")
    _check_x(x, "reg_inc_beta")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    cdef double val = _ix_from_bt(x, a, b, _bt(x, a, b, _log_beta(a, b)))
    _check_converged(val, x, a, b)
    return _clamp01(val)


def integrated_cdf_ab(double x, double a, double b):
    """Y(x) = integral of the Beta(a, b) CDF from 0 to x, in closed form."""
    _check_shape(a, b, "integrated_cdf_ab")
    _check_x(x, "integrated_cdf_ab")
    cdef double m = a / (a + b)
    cdef double bt, y
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0 - m
    bt = _bt(x, a, b, _log_beta(a, b))
    y = (x - m) * _ix_from_bt(x, a, b, bt) + bt / (a + b)
    _check_converged(y, x, a, b)
    return y if y > 0.0 else 0.0


def reg_inc_beta_many(xs, double a, double b):
    """Vectorized I_x(a, b) over a 1-D float64 array of x values."""
    _check_shape(a, b, "reg_inc_beta_many")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty_like(arr)
    cdef double logbeta = _log_beta(a, b)
    cdef Py_ssize_t i, n = arr.shape[0]
    cdef double x, val
    for i in range(n):
        x = arr[i]
        _check_x(x, "reg_inc_beta_many")
        if x == 0.0:
            out[i] = 0.0
        elif x == 1.0:
            out[i] = 1.0
        else:
            val = _ix_from_bt(x, a, b, _bt(x, a, b, logbeta))
            _check_converged(val, x, a, b)
            out[i] = _clamp01(val)
    return out


def cdf_and_integrated_many(xs, double a, double b):
    """CDF and integrated-CDF values of Beta(a, b) over an array of x.

    Shares one continued-fraction evaluation per point between the two outputs.
    """
    _check_shape(a, b, "cdf_and_integrated_many")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cdf = np.empty_like(arr)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] icdf = np.empty_like(arr)
    cdef double logbeta = _log_beta(a, b)
    cdef double s = a + b
    cdef double m = a / s
    cdef Py_ssize_t i, n = arr.shape[0]
    cdef double x, bt, ix, y
    for i in range(n):
        x = arr[i]
        _check_x(x, "cdf_and_integrated_many")
        if x == 0.0:
            cdf[i] = 0.0
            icdf[i] = 0.0
        elif x == 1.0:
            cdf[i] = 1.0
            icdf[i] = 1.0 - m
        else:
            bt = _bt(x, a, b, logbeta)
            ix = _ix_from_bt(x, a, b, bt)
            _check_converged(ix, x, a, b)
            cdf[i] = _clamp01(ix)
            y = (x - m) * ix + bt / s
            icdf[i] = y if y > 0.0 else 0.0
    return cdf, icdf


def integrated_cdf_many(xs, double a, double b):
    """Vectorized integrated CDF of Beta(a, b) over an array of x values."""
    return cdf_and_integrated_many(xs, a, b)[1]


def laplace_series(double a, double b, double s):
    """E[exp(-s X)] for X ~ Beta(a, b), exact via the confluent series.

    The transform is the Kummer function M(a, a+b, -s); for s > 0 the
    alternating series is replaced through M(a, c, -s) = exp(-s) M(c-a, c, s)
    by one with all-positive terms, so there is no cancellation for any shape
    pair or transform argument. Terms follow the ratio recurrence
    t_{k+1} = t_k (num+k) s / ((c+k)(k+1)) and the sum is rescaled before it
    can overflow; the tail is dropped once it falls below 1e-17 of the sum
    (valid only past k ~ s, where the terms have started decreasing).
    """
    _check_shape(a, b, "laplace_series")
    if not isfinite(s):
        raise DomainError(f"laplace_series requires finite s, got {s}")
    if s == 0.0:
        return 1.0
    cdef double num, z
    if s > 0.0:
        num = b
        z = s
    else:
        num = a
        z = -s
    cdef double c = a + b
    cdef double term = 1.0
    cdef double total = 1.0
    cdef double log_scale = 0.0
    cdef int k
    cdef int kmax = 500 + <int>(8.0 * z)
    cdef bint converged = False
    for k in range(kmax):
        term *= (num + k) * z / ((c + k) * (k + 1.0))
        total += term
        if term <= total * 1e-17 and k >= z:
            converged = True
            break
        if total > 1e250:
            term *= 1e-250
            total *= 1e-250
            log_scale += 250.0 * log(10.0)
    if not converged:
        raise ConvergenceError(
            f"laplace_series did not converge for a={a}, b={b}, s={s}"
        )
    if s > 0.0:
        # exp(-s) underflows alone near s ~ 745 even when exp(-s) * total
        # is representable, so recombine in log space past that point
        if log_scale == 0.0 and s < 700.0:
            return exp(-s) * total
        return exp(-s + log_scale + log(total))
    if log_scale == 0.0:
        return total
    return exp(log_scale + log(total))
