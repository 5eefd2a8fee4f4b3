"""Expected-utility portfolio choice with exponential (CARA) utility.

One risky asset X ~ BetaLaw on [0, 1], one risk-free rate r; final wealth for
a risky fraction gamma is W0 (1 + r + gamma (X - r)) and utility is
U(w) = -exp(-lambda w). W0 folds into an effective aversion
lambda_eff = lambda * W0, so expected utility factors as

    EU(gamma) = -exp(-lambda_eff (1 + r - gamma r)) * E[exp(-lambda_eff gamma X)]

with E[exp(-s X)] computed exactly for the discrete variants and via the
all-positive-term confluent (Kummer) series for interior laws, which holds to
machine precision for every shape pair, including the extreme boundary-layer
shapes (alpha, beta << 1) that arise next to the dome's parabola.
"""

import enum
import math
from dataclasses import dataclass

from betadome import kernels
from betadome.errors import DomainError
from betadome.laws import BetaLaw, LawKind

#: golden-section bracket width at which the search stops
_GOLDEN_TOL = 1e-9
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

#: step for the one-sided endpoint-derivative checks
_ENDPOINT_STEP = 1e-6


class Saturation(enum.Enum):
    """Which endpoint of [0, 1] the optimal fraction saturates, if any."""

    NONE = "None"
    AT_ZERO = "AtZero"
    AT_ONE = "AtOne"


@dataclass(frozen=True)
class PortfolioProblem:
    """Risky law, CARA aversion lambda > 0, risk-free rate in (0, 1), wealth > 0."""

    law: BetaLaw
    lam: float
    rate: float
    wealth: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > 0.0):
            raise DomainError(f"lambda must be positive, got {self.lam}")
        if not 0.0 < self.rate < 1.0:
            raise DomainError(f"rate must lie in (0, 1), got {self.rate}")
        if not (math.isfinite(self.wealth) and self.wealth > 0.0):
            raise DomainError(f"wealth must be positive, got {self.wealth}")

    @property
    def lam_eff(self):
        """Effective aversion lambda * W0."""
        return self.lam * self.wealth


@dataclass(frozen=True)
class OptimalAllocation:
    gamma_star: float
    eu_at_optimum: float
    boundary_active: Saturation


def laplace_transform(law, s):
    """E[exp(-s X)] for any family member.

    Exact for the discrete variants; interior laws go through the confluent
    series kernel, which carries no cancellation and needs no refinement.
    """
    if not math.isfinite(s):
        raise DomainError(f"laplace_transform requires finite s, got {s}")
    if law.kind is LawKind.POINT_MASS:
        return math.exp(-s * law.m)
    if law.kind is LawKind.TWO_POINT:
        return (1.0 - law.m) + law.m * math.exp(-s)
    return kernels.laplace_series(law.alpha, law.beta, s)


def expected_utility(p, gamma):
    """E[-exp(-lambda_eff (1 + r + gamma (X - r)))] for gamma in [0, 1]."""
    if not 0.0 <= gamma <= 1.0:
        raise DomainError(f"expected_utility requires gamma in [0, 1], got {gamma}")
    leff = p.lam_eff
    outside = math.exp(-leff * (1.0 + p.rate - gamma * p.rate))
    return -outside * laplace_transform(p.law, leff * gamma)


def _eu_evaluator(p):
    """Fast EU(gamma) closure specialized per law kind."""
    leff = p.lam_eff
    rate = p.rate
    law = p.law
    if law.kind is LawKind.POINT_MASS:
        m = law.m
        return lambda g: -math.exp(-leff * (1.0 + rate + g * (m - rate)))
    if law.kind is LawKind.TWO_POINT:
        m = law.m

        def eu_two_point(g):
            outside = math.exp(-leff * (1.0 + rate - g * rate))
            return -outside * ((1.0 - m) + m * math.exp(-leff * g))

        return eu_two_point
    alpha, beta = law.alpha, law.beta

    def eu_interior(g):
        laplace = kernels.laplace_series(alpha, beta, leff * g)
        return -math.exp(-leff * (1.0 + rate - g * rate)) * laplace

    return eu_interior


def _golden_max(func, lo, hi, tol=_GOLDEN_TOL):
    """Golden-section search for the maximum of a strictly concave function."""
    h = hi - lo
    c = hi - _INV_PHI * h
    d = lo + _INV_PHI * h
    fc = func(c)
    fd = func(d)
    while h > tol:
        if fc < fd:
            lo, c, fc = c, d, fd
            h = hi - lo
            d = lo + _INV_PHI * h
            fd = func(d)
        else:
            hi, d, fd = d, c, fc
            h = hi - lo
            c = hi - _INV_PHI * h
            fc = func(c)
    return 0.5 * (lo + hi)


def optimal_gamma(p):
    """Maximize expected utility over the risky fraction gamma in [0, 1].

    Expected utility is strictly concave in gamma (concave utility of a
    wealth affine in gamma), so a golden-section search suffices; endpoint
    saturation is decided first from the one-sided derivative sign
    (central differences with step 1e-6). Mean <= rate forces gamma = 0
    (no risk premium); a deterministic risky return above the rate forces
    gamma = 1.
    """
    law = p.law
    if law.mean <= p.rate:
        # includes the point-mass tie m == rate, where the whole interval is
        # optimal and 0 is returned deterministically
        return OptimalAllocation(0.0, expected_utility(p, 0.0), Saturation.AT_ZERO)
    if law.kind is LawKind.POINT_MASS:
        return OptimalAllocation(1.0, expected_utility(p, 1.0), Saturation.AT_ONE)

    eu = _eu_evaluator(p)
    h = _ENDPOINT_STEP
    if eu(1.0) - eu(1.0 - 2.0 * h) >= 0.0:
        gamma, side = 1.0, Saturation.AT_ONE
    elif eu(2.0 * h) - eu(0.0) <= 0.0:
        gamma, side = 0.0, Saturation.AT_ZERO
    else:
        gamma, side = _golden_max(eu, 0.0, 1.0), Saturation.NONE
    return OptimalAllocation(gamma, expected_utility(p, gamma), side)


def closed_form_boundary_gamma(m, lam, rate):
    """Optimal fraction for the parabola (two-point) law of mean m > rate:

        min{ (1/lambda) ln( m (1-rate) / (rate (1-m)) ), 1 }

    Stated for unit wealth; fold wealth in by passing lambda_eff.
    """
    if not (math.isfinite(lam) and lam > 0.0):
        raise DomainError(f"lambda must be positive, got {lam}")
    if not 0.0 < rate < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {rate}")
    if not rate < m < 1.0:
        raise DomainError(
            f"closed_form_boundary_gamma requires rate < m < 1, got m={m}, rate={rate}"
        )
    value = math.log(m * (1.0 - rate) / (rate * (1.0 - m))) / lam
    return min(value, 1.0)


def mean_threshold(lam, rate):
    """The mean above which full risky investment is optimal regardless of
    variance: rate e^lambda / (rate e^lambda + 1 - rate), computed in the
    overflow-safe form 1 / (1 + ((1-rate)/rate) e^(-lambda))."""
    if not (math.isfinite(lam) and lam > 0.0):
        raise DomainError(f"lambda must be positive, got {lam}")
    if not 0.0 < rate < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {rate}")
    return 1.0 / (1.0 + ((1.0 - rate) / rate) * math.exp(-lam))


def in_full_risk_region(m, v, lam, rate):
    """True iff (m, v) lies in the dome closure with m >= the mean threshold
    (sufficient for gamma* = 1, not necessary)."""
    if not 0.0 <= m <= 1.0:
        return False
    if not -1e-13 <= v <= m - m * m + 1e-13:
        return False
    return m >= mean_threshold(lam, rate)
