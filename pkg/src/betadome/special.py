"""Public special-function surface: shape parameters and the beta kernels.

Thin, validated facade over :mod:`betadome.kernels`; everything here is a pure
function of its arguments (no state, no caching) and thread-safe.
"""

import math
from dataclasses import dataclass

from betadome import kernels
from betadome.errors import DomainError


@dataclass(frozen=True)
class ShapeParams:
    """Classical Beta shape parameters (alpha, beta), both strictly positive."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise DomainError(f"alpha must be a positive real, got {self.alpha}")
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise DomainError(f"beta must be a positive real, got {self.beta}")


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    return kernels.log_gamma(x)


def digamma(x):
    """Psi(x), the logarithmic derivative of Gamma, for x > 0."""
    return kernels.digamma(x)


def beta_fn(p):
    """Complete beta function B(alpha, beta) = exp(lnG(a) + lnG(b) - lnG(a+b))."""
    return math.exp(kernels.log_beta(p.alpha, p.beta))


def log_beta_fn(p):
    """ln B(alpha, beta); use instead of beta_fn when B would over/underflow."""
    return kernels.log_beta(p.alpha, p.beta)


def reg_inc_beta(x, p):
    """Regularized incomplete beta function I_x(alpha, beta) for x in [0, 1]."""
    return kernels.reg_inc_beta(x, p.alpha, p.beta)
