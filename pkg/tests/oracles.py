"""Independent reference implementations used only by the test suite.

Everything in this module is deliberately slow and simple: high-precision
mpmath evaluations, brute-force adaptive quadrature, and composite Simpson
rules.  Nothing under ``src/`` imports this module, and nothing here imports
``betadome`` — the two sides meet only inside test assertions.
"""

import math
import warnings

import mpmath
import numpy as np
import scipy.integrate
import scipy.special

mpmath.mp.dps = 40


def _quad(f, lo, hi, **kwargs):
    """scipy.integrate.quad with roundoff-limit warnings silenced.

    Near-singular Beta densities make quad report that the requested
    tolerance is unreachable even when the returned value is good to 1e-11;
    the tests assert on accuracy directly, so the warning is pure noise.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.integrate.IntegrationWarning)
        value, _ = scipy.integrate.quad(f, lo, hi, **kwargs)
    return value


# ----------------------------------------------------------------------
# High-precision special functions (mpmath).


def mp_log_gamma(x):
    return float(mpmath.loggamma(mpmath.mpf(repr(x))))


def mp_digamma(x):
    return float(mpmath.digamma(mpmath.mpf(repr(x))))


def mp_beta(a, b):
    return float(mpmath.beta(mpmath.mpf(repr(a)), mpmath.mpf(repr(b))))


def mp_reg_inc_beta(x, a, b):
    """Regularized incomplete beta I_x(a, b) at 40 significant digits."""
    return float(
        mpmath.betainc(
            mpmath.mpf(repr(a)),
            mpmath.mpf(repr(b)),
            0,
            mpmath.mpf(repr(x)),
            regularized=True,
        )
    )


# ----------------------------------------------------------------------
# Quadrature oracles (scipy + stdlib only).


def beta_pdf(a, b, x):
    """Beta density via math.lgamma, independent of the package kernels."""
    if x <= 0.0 or x >= 1.0:
        raise ValueError("interior points only")
    log_norm = math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
    return math.exp(log_norm + (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x))


def quad_beta_cdf(a, b, x):
    """CDF by adaptive quadrature of the density (shapes not too singular)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    return _quad(lambda t: beta_pdf(a, b, t), 0.0, x,
                 limit=200, epsabs=1e-13, epsrel=1e-13)


def quad_integrated_cdf(a, b, x):
    """Y(x) = int_0^x I_t(a, b) dt using the scipy (Cephes) CDF."""
    if x <= 0.0:
        return 0.0
    return _quad(lambda t: scipy.special.betainc(a, b, t), 0.0, x,
                 limit=200, epsabs=1e-12)


def quad_laplace(a, b, s):
    """E[exp(-s X)] for X ~ Beta(a, b) by adaptive quadrature."""
    return _quad(lambda t: math.exp(-s * t) * beta_pdf(a, b, t), 0.0, 1.0,
                 limit=200, epsabs=1e-13, epsrel=1e-13)


def quad_moment(a, b, k, center=0.0):
    """E[(X - center)^k] for X ~ Beta(a, b) by adaptive quadrature."""
    return _quad(lambda t: (t - center) ** k * beta_pdf(a, b, t), 0.0, 1.0,
                 limit=200, epsabs=1e-13, epsrel=1e-13)


def quad_unit(f, epsabs=1e-12):
    """Adaptive quadrature of f over [0, 1] (robust to endpoint kinks)."""
    return _quad(f, 0.0, 1.0, limit=500, epsabs=epsabs, epsrel=epsabs)


def simpson(f, lo, hi, n=2048):
    """Composite Simpson rule with n (even) panels."""
    if n % 2:
        n += 1
    xs = np.linspace(lo, hi, n + 1)
    ys = np.array([f(x) for x in xs])
    h = (hi - lo) / n
    return h / 3.0 * (ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-1:2].sum())


# ----------------------------------------------------------------------
# Closed forms for the discrete boundary laws and simple anchors.


def two_point_cdf(m, x):
    """(1-m) delta_0 + m delta_1."""
    if x < 0.0:
        return 0.0
    if x < 1.0:
        return 1.0 - m
    return 1.0


def point_mass_cdf(m, x):
    return 1.0 if x >= m else 0.0


def two_point_integrated(m, x):
    return (1.0 - m) * max(0.0, min(x, 1.0))


def point_mass_integrated(m, x):
    return max(0.0, x - m)


def uniform_laplace(s):
    """E[exp(-s U)] for U uniform on [0, 1]."""
    if s == 0.0:
        return 1.0
    return -math.expm1(-s) / s


def two_point_laplace(m, s):
    return (1.0 - m) + m * math.exp(-s)


# ----------------------------------------------------------------------
# Samplers.  Every test passes its own seeded Generator.


def parabola(m):
    return m - m * m


def sample_mv(rng, n, margin=0.02):
    """n interior dome points with a relative safety margin from the edges."""
    ms = rng.uniform(margin, 1.0 - margin, size=n)
    fracs = rng.uniform(margin, 1.0 - margin, size=n)
    return [(float(m), float(f * parabola(m))) for m, f in zip(ms, fracs)]


def sample_shapes(rng, n, lo=0.05, hi=50.0):
    """n log-uniform (alpha, beta) pairs."""
    out = rng.uniform(math.log(lo), math.log(hi), size=(n, 2))
    return [(float(math.exp(a)), float(math.exp(b))) for a, b in out]


def mv_from_shapes(a, b):
    m = a / (a + b)
    v = a * b / ((a + b) ** 2 * (a + b + 1.0))
    return m, v
