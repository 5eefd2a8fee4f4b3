"""The mean-variance dome: admissible (m, v) pairs for laws on [0, 1].

The open dome is {(m, v) : 0 < m < 1, 0 < v < D(m)} with D(m) = m - m^2;
its closure adds the bottom edge (point masses), the parabola v = D(m)
(two-point laws), and the two corners. ``to_shape``/``from_shape`` realize the
bijection between the open dome and the (alpha, beta) quadrant, and
``classify_region`` places an interior point in the density-shape regions
bounded by the curves C1 and C2.
"""

import enum
import math
from dataclasses import dataclass

from betadome.errors import DegeneratePointError, DomainError
from betadome.special import ShapeParams

#: points within this distance of v = 0 or v = D(m) resolve onto the boundary
BOUNDARY_SNAP = 1e-13

#: |v - Ci(m)| below this tags a point as lying on the curve itself
ON_CURVE_TOL = 1e-12


def parabola(m):
    """D(m) = m - m^2, the maximal variance of a [0, 1]-supported law of mean m."""
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"parabola requires m in [0, 1], got {m}")
    return m - m * m


def curve_c1(m):
    """C1(m) = m^2 (1-m) / (1+m); below it the first shape parameter exceeds 1."""
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"curve_c1 requires m in [0, 1], got {m}")
    return m * m * (1.0 - m) / (1.0 + m)


def curve_c2(m):
    """C2(m) = m (1-m)^2 / (2-m); below it the second shape parameter exceeds 1."""
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"curve_c2 requires m in [0, 1], got {m}")
    return m * (1.0 - m) * (1.0 - m) / (2.0 - m)


class Boundary(enum.Enum):
    """Where a dome point sits within the closure."""

    INTERIOR = "Interior"
    BOTTOM_EDGE = "BottomEdge"
    PARABOLA = "Parabola"
    CORNER_ZERO = "CornerZero"
    CORNER_ONE = "CornerOne"


class DomeRegion(enum.Enum):
    """Density-shape class of an interior point (per the C1/C2 curves)."""

    ARCHED = "Arched"
    USHAPED = "UShaped"
    DECREASING = "Decreasing"
    INCREASING = "Increasing"
    ON_C1 = "OnC1"
    ON_C2 = "OnC2"
    ON_BOTH = "OnBoth"


@dataclass(frozen=True)
class DomePoint:
    """A (mean, variance) pair inside the dome closure."""

    m: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and 0.0 <= self.m <= 1.0):
            raise DomainError(f"mean must lie in [0, 1], got {self.m}")
        if not (math.isfinite(self.v) and self.v >= -BOUNDARY_SNAP):
            raise DomainError(f"variance must be nonnegative, got {self.v}")
        cap = self.m - self.m * self.m
        if self.v > cap + BOUNDARY_SNAP:
            raise DomainError(
                f"variance {self.v} exceeds the parabola bound D({self.m}) = {cap}"
            )

    @property
    def boundary(self):
        """Boundary classification with snap tolerance on v."""
        if self.v <= BOUNDARY_SNAP:
            if self.m <= BOUNDARY_SNAP:
                return Boundary.CORNER_ZERO
            if self.m >= 1.0 - BOUNDARY_SNAP:
                return Boundary.CORNER_ONE
            return Boundary.BOTTOM_EDGE
        if self.v >= self.m - self.m * self.m - BOUNDARY_SNAP:
            return Boundary.PARABOLA
        return Boundary.INTERIOR

    @property
    def is_interior(self):
        return self.boundary is Boundary.INTERIOR


def to_shape(pt):
    """Map an interior dome point to its unique (alpha, beta)."""
    if not pt.is_interior:
        raise DegeneratePointError(
            f"({pt.m}, {pt.v}) lies on the dome boundary ({pt.boundary.value}); "
            "no finite shape parameters exist"
        )
    t = (pt.m - pt.m * pt.m - pt.v) / pt.v
    return ShapeParams(alpha=pt.m * t, beta=(1.0 - pt.m) * t)


def from_shape(p):
    """Map (alpha, beta) to its dome point (m, v)."""
    s = p.alpha + p.beta
    m = p.alpha / s
    v = p.alpha * p.beta / (s * s * (s + 1.0))
    return DomePoint(m=m, v=v)


def classify_region(pt):
    """Shape region of an interior dome point.

    v < C1(m) iff alpha > 1 and v < C2(m) iff beta > 1 (substitute the
    bijection); the four open regions follow, and points within ON_CURVE_TOL
    of a curve get the corresponding On* tag instead of a guess.
    """
    if not pt.is_interior:
        raise DegeneratePointError(
            f"({pt.m}, {pt.v}) lies on the dome boundary ({pt.boundary.value}); "
            "region classification is defined on the open dome only"
        )
    c1 = curve_c1(pt.m)
    c2 = curve_c2(pt.m)
    on1 = abs(pt.v - c1) <= ON_CURVE_TOL
    on2 = abs(pt.v - c2) <= ON_CURVE_TOL
    if on1 and on2:
        return DomeRegion.ON_BOTH
    if on1:
        return DomeRegion.ON_C1
    if on2:
        return DomeRegion.ON_C2
    if pt.v < min(c1, c2):
        return DomeRegion.ARCHED
    if pt.v > max(c1, c2):
        return DomeRegion.USHAPED
    return DomeRegion.DECREASING if pt.m < 0.5 else DomeRegion.INCREASING
