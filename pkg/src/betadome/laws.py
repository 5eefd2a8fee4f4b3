"""The closed Beta family as a value type.

Three variants: INTERIOR (a genuine Beta law, carried as a consistent
(mean, variance) / (alpha, beta) pair), POINT_MASS (the Dirac law at m on the
bottom edge), and TWO_POINT (the Bernoulli-type boundary law
(1-m) delta_0 + m delta_1 on the parabola). All variants expose the CDF and
the integrated CDF Y(x) = int_0^x F (the quantity second-order dominance is
decided on); only INTERIOR has a density.
"""

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from betadome import kernels
from betadome.dome import Boundary, DomePoint, from_shape, parabola, to_shape
from betadome.errors import (
    DomainError,
    NoDensityError,
    SingularEndpointError,
)
from betadome.special import ShapeParams


class LawKind(enum.Enum):
    INTERIOR = "Interior"
    POINT_MASS = "PointMass"
    TWO_POINT = "TwoPoint"


@dataclass(frozen=True)
class MomentSummary:
    """First four moments; skewness/kurtosis are None when undefined (zero variance)."""

    mean: float
    variance: float
    skewness: Optional[float]
    kurtosis: Optional[float]


@dataclass(frozen=True)
class BetaLaw:
    """Immutable member of the closed family. Build via the classmethods."""

    kind: LawKind
    m: float
    v: float
    alpha: Optional[float] = None
    beta: Optional[float] = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def interior(cls, m, v):
        """Interior Beta law of mean m and variance v (0 < v < D(m))."""
        pt = DomePoint(m, v)
        shape = to_shape(pt)  # raises DegeneratePointError off the open dome
        return cls(LawKind.INTERIOR, m=pt.m, v=pt.v, alpha=shape.alpha, beta=shape.beta)

    @classmethod
    def from_shape_params(cls, p):
        """Interior Beta law from classical (alpha, beta)."""
        pt = from_shape(p)
        return cls(LawKind.INTERIOR, m=pt.m, v=pt.v, alpha=p.alpha, beta=p.beta)

    @classmethod
    def point_mass(cls, m):
        """Dirac mass at m in [0, 1]."""
        if not (math.isfinite(m) and 0.0 <= m <= 1.0):
            raise DomainError(f"point_mass requires m in [0, 1], got {m}")
        return cls(LawKind.POINT_MASS, m=m, v=0.0)

    @classmethod
    def two_point(cls, m):
        """Two-point boundary law (1-m) delta_0 + m delta_1, m in (0, 1)."""
        if not (math.isfinite(m) and 0.0 < m < 1.0):
            raise DomainError(f"two_point requires m in (0, 1), got {m}")
        return cls(LawKind.TWO_POINT, m=m, v=m - m * m)

    @classmethod
    def from_point(cls, pt):
        """The family member sitting at a dome-closure point."""
        where = pt.boundary
        if where is Boundary.INTERIOR:
            return cls.interior(pt.m, pt.v)
        if where is Boundary.PARABOLA:
            return cls.two_point(pt.m)
        if where is Boundary.CORNER_ZERO:
            return cls.point_mass(0.0)
        if where is Boundary.CORNER_ONE:
            return cls.point_mass(1.0)
        return cls.point_mass(pt.m)

    # -- basic accessors ----------------------------------------------------

    @property
    def mean(self):
        return self.m

    @property
    def variance(self):
        return self.v

    @property
    def shape(self):
        """ShapeParams for INTERIOR laws, None for the discrete variants."""
        if self.kind is LawKind.INTERIOR:
            return ShapeParams(self.alpha, self.beta)
        return None

    def jump_points(self):
        """Locations of atoms (empty for interior laws)."""
        if self.kind is LawKind.POINT_MASS:
            return (self.m,)
        if self.kind is LawKind.TWO_POINT:
            return (0.0, 1.0)
        return ()

    def describe(self):
        """Short human/machine readable tag, e.g. 'Interior(m=0.3, v=0.05)'."""
        if self.kind is LawKind.INTERIOR:
            return f"Interior(m={self.m:.9g}, v={self.v:.9g})"
        if self.kind is LawKind.TWO_POINT:
            return f"TwoPoint(m={self.m:.9g})"
        return f"PointMass(m={self.m:.9g})"

    # -- distribution functions --------------------------------------------

    def cdf(self, x):
        """Right-continuous CDF at x in [0, 1]."""
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"cdf requires x in [0, 1], got {x}")
        if self.kind is LawKind.INTERIOR:
            return kernels.reg_inc_beta(x, self.alpha, self.beta)
        if self.kind is LawKind.POINT_MASS:
            return 1.0 if x >= self.m else 0.0
        return 1.0 if x >= 1.0 else 1.0 - self.m

    def cdf_values(self, xs):
        """CDF over a 1-D array of x values."""
        if self.kind is LawKind.INTERIOR:
            return kernels.reg_inc_beta_many(xs, self.alpha, self.beta)
        xs = np.asarray(xs, dtype=np.float64)
        if np.any((xs < 0.0) | (xs > 1.0)):
            raise DomainError("cdf_values requires x in [0, 1]")
        if self.kind is LawKind.POINT_MASS:
            return np.where(xs >= self.m, 1.0, 0.0)
        return np.where(xs >= 1.0, 1.0, 1.0 - self.m)

    def pdf(self, x):
        """Density at x (INTERIOR laws only).

        At the endpoints the finite limit is returned when it exists
        (0 for a shape parameter > 1, the finite boundary value at exactly 1)
        and SingularEndpointError is raised when the density diverges there.
        """
        if self.kind is not LawKind.INTERIOR:
            raise NoDensityError(f"{self.describe()} has no density")
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"pdf requires x in [0, 1], got {x}")
        a, b = self.alpha, self.beta
        if x == 0.0:
            if a > 1.0:
                return 0.0
            if a == 1.0:
                return math.exp(-kernels.log_beta(a, b))
            raise SingularEndpointError(f"density of {self.describe()} diverges at x=0")
        if x == 1.0:
            if b > 1.0:
                return 0.0
            if b == 1.0:
                return math.exp(-kernels.log_beta(a, b))
            raise SingularEndpointError(f"density of {self.describe()} diverges at x=1")
        return math.exp(
            (a - 1.0) * math.log(x)
            + (b - 1.0) * math.log1p(-x)
            - kernels.log_beta(a, b)
        )

    def integrated_cdf(self, x):
        """Y(x) = int_0^x F(t) dt; nondecreasing, convex, Y(1) = 1 - mean."""
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"integrated_cdf requires x in [0, 1], got {x}")
        if self.kind is LawKind.INTERIOR:
            return kernels.integrated_cdf_ab(x, self.alpha, self.beta)
        if self.kind is LawKind.POINT_MASS:
            return max(0.0, x - self.m)
        return (1.0 - self.m) * x

    def integrated_cdf_values(self, xs):
        """Y over a 1-D array of x values."""
        if self.kind is LawKind.INTERIOR:
            return kernels.integrated_cdf_many(xs, self.alpha, self.beta)
        xs = np.asarray(xs, dtype=np.float64)
        if np.any((xs < 0.0) | (xs > 1.0)):
            raise DomainError("integrated_cdf_values requires x in [0, 1]")
        if self.kind is LawKind.POINT_MASS:
            return np.maximum(0.0, xs - self.m)
        return (1.0 - self.m) * xs

    def cdf_and_integrated_values(self, xs):
        """(F, Y) pair over an array; one kernel pass for interior laws."""
        if self.kind is LawKind.INTERIOR:
            return kernels.cdf_and_integrated_many(xs, self.alpha, self.beta)
        return self.cdf_values(xs), self.integrated_cdf_values(xs)

    # -- moments -------------------------------------------------------------

    def moments(self):
        """Mean, variance, skewness, kurtosis (standard conventions).

        Skewness is the third standardized central moment and kurtosis the
        fourth (not excess). Both are None for point masses.
        """
        if self.kind is LawKind.INTERIOR:
            a, b = self.alpha, self.beta
            s = a + b
            skew = 2.0 * (b - a) * math.sqrt(s + 1.0) / ((s + 2.0) * math.sqrt(a * b))
            kurt = 3.0 + 6.0 * ((a - b) ** 2 * (s + 1.0) - a * b * (s + 2.0)) / (
                a * b * (s + 2.0) * (s + 3.0)
            )
            return MomentSummary(self.m, self.v, skew, kurt)
        if self.kind is LawKind.POINT_MASS:
            return MomentSummary(self.m, 0.0, None, None)
        pq = self.m * (1.0 - self.m)
        skew = (1.0 - 2.0 * self.m) / math.sqrt(pq)
        kurt = (1.0 - 3.0 * pq) / pq
        return MomentSummary(self.m, self.v, skew, kurt)

    def affine_moments(self, scale, shift):
        """(mean, variance) of scale*X + shift for scale > 0.

        Dominance orderings are invariant under a common positive affine map
        of two laws, so comparisons made on [0, 1] transfer to shifted/scaled
        supports (e.g. returns on [-0.05, 0.95]).
        """
        if not scale > 0.0:
            raise DomainError(f"affine_moments requires scale > 0, got {scale}")
        return (scale * self.m + shift, scale * scale * self.v)


def boundary_limit_check(m, v_fraction):
    """Sup-deviation of the CDF of Interior(m, v_fraction*D(m)) from the
    two-point CDF value 1-m over the probe grid x in {0.1, ..., 0.9}.

    Shrinks toward 0 as v_fraction -> 1 (convergence in distribution to the
    parabola law).
    """
    if not 0.0 < m < 1.0:
        raise DomainError(f"boundary_limit_check requires m in (0, 1), got {m}")
    if not 0.0 < v_fraction < 1.0:
        raise DomainError(
            f"boundary_limit_check requires v_fraction in (0, 1), got {v_fraction}"
        )
    law = BetaLaw.interior(m, v_fraction * parabola(m))
    probes = [0.1 * k for k in range(1, 10)]
    return max(abs(law.cdf(x) - (1.0 - m)) for x in probes)
