"""First- and second-order stochastic dominance over the closed family.

Second-order comparisons are decided on the integrated CDF Y(x) = int_0^x F
(closed form for interior laws, piecewise-linear exact for the discrete
variants) over a fixed Chebyshev probe grid augmented with the discrete jump
locations of either law and the points just left of each jump. First-order
comparisons are pointwise on the CDF over the same grid.
"""

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from betadome.errors import (
    DegeneratePointError,
    DomainError,
    IncomparablePairError,
    MeanMismatchError,
    NoCrossingError,
    ToleranceError,
    VerificationError,
)
from betadome.laws import BetaLaw, LawKind

#: tolerance on integrated-CDF differences when deciding dominance
EPS_Y = 1e-9
#: laws are Equal when their Y functions agree within this everywhere ...
EQUAL_Y_TOL = 1e-10
#: ... and their means within this
MEAN_TOL = 1e-12
#: tolerance on pointwise CDF differences for first-order comparisons
EPS_F = 1e-12

_N_CHEB = 2049
_CHEB_GRID = 0.5 * (1.0 - np.cos(np.pi * np.arange(_N_CHEB) / (_N_CHEB - 1)))
_CHEB_GRID[0] = 0.0
_CHEB_GRID[-1] = 1.0


class Verdict(enum.Enum):
    FIRST_DOMINATES = "FirstDominates"
    SECOND_DOMINATES = "SecondDominates"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


class OrderKind(enum.Enum):
    FSD = "FSD"
    SSD = "SSD"


@dataclass(frozen=True)
class DominanceResult:
    """Outcome of a dominance comparison.

    delta_min/delta_max are the grid extremes of the first-minus-second gap:
    of Y_first - Y_second for second-order results, of F_first - F_second for
    first-order results. witness_x (present iff Incomparable) is a point where
    the second law's dominance fails.
    """

    verdict: Verdict
    order: Optional[OrderKind]
    delta_min: float
    delta_max: float
    witness_x: Optional[float] = None


@dataclass(frozen=True)
class HassePath:
    """A verified chain in the second-order lattice from delta_0 to delta_1."""

    nodes: Tuple[BetaLaw, ...]
    edge_checks: Tuple[DominanceResult, ...]


def probe_grid(a, b):
    """Deterministic comparison grid for a pair of laws.

    Chebyshev-spaced points on [0, 1] plus every atom location of either law
    and the representable point just left of each positive atom (so pointwise
    CDF comparisons see both sides of every jump).
    """
    extra = []
    for law in (a, b):
        for j in law.jump_points():
            extra.append(j)
            if j > 0.0:
                extra.append(np.nextafter(j, -1.0))
    if not extra:
        return _CHEB_GRID
    xs = np.concatenate([_CHEB_GRID, np.asarray(extra, dtype=np.float64)])
    xs = xs[(xs >= 0.0) & (xs <= 1.0)]
    return np.unique(xs)


def _fsd_holds(f_dominant, f_dominated):
    """Pointwise CDF order: dominant's CDF never above, strictly below somewhere."""
    gap = f_dominated - f_dominant
    return bool(gap.min() >= -EPS_F and gap.max() > EPS_F)


def ssd_compare(a, b):
    """Second-order comparison of two laws.

    The second law dominates iff Delta(x) = Y_a(x) - Y_b(x) >= -EPS_Y on the
    whole probe grid (and symmetrically for the first); equal-Y laws are Equal;
    a sign change beyond tolerance in both directions is Incomparable. The
    ``order`` field upgrades to FSD when the pointwise CDF order also holds.
    """
    xs = probe_grid(a, b)
    fa, ya = a.cdf_and_integrated_values(xs)
    fb, yb = b.cdf_and_integrated_values(xs)
    delta = ya - yb
    dmin = float(delta.min())
    dmax = float(delta.max())

    if max(abs(dmin), abs(dmax)) <= EQUAL_Y_TOL and abs(a.mean - b.mean) <= MEAN_TOL:
        return DominanceResult(Verdict.EQUAL, None, dmin, dmax)

    second_ok = dmin >= -EPS_Y
    first_ok = dmax <= EPS_Y
    if second_ok and first_ok:
        # both within tolerance of weak dominance; pick the larger one-sided gap
        second_ok = dmax >= -dmin
        first_ok = not second_ok
    if second_ok:
        order = OrderKind.FSD if _fsd_holds(fb, fa) else OrderKind.SSD
        return DominanceResult(Verdict.SECOND_DOMINATES, order, dmin, dmax)
    if first_ok:
        order = OrderKind.FSD if _fsd_holds(fa, fb) else OrderKind.SSD
        return DominanceResult(Verdict.FIRST_DOMINATES, order, dmin, dmax)
    witness = float(xs[int(np.argmin(delta))])
    return DominanceResult(Verdict.INCOMPARABLE, None, dmin, dmax, witness_x=witness)


def fsd_compare(a, b):
    """First-order (pointwise CDF) comparison of two laws.

    Whenever a first-order verdict is found, consistency with the second-order
    comparator is asserted (first-order dominance implies second-order).
    """
    xs = probe_grid(a, b)
    fa, ya = a.cdf_and_integrated_values(xs)
    fb, yb = b.cdf_and_integrated_values(xs)
    gap = fa - fb
    gmin = float(gap.min())
    gmax = float(gap.max())
    ydelta = ya - yb

    if max(abs(gmin), abs(gmax)) <= EPS_F:
        return DominanceResult(Verdict.EQUAL, None, gmin, gmax)
    if gmin >= -EPS_F:
        if float(ydelta.min()) < -EPS_Y:
            raise VerificationError(
                "first-order dominance contradicted the integrated-CDF order "
                f"for {a.describe()} vs {b.describe()}"
            )
        return DominanceResult(Verdict.SECOND_DOMINATES, OrderKind.FSD, gmin, gmax)
    if gmax <= EPS_F:
        if float(ydelta.max()) > EPS_Y:
            raise VerificationError(
                "first-order dominance contradicted the integrated-CDF order "
                f"for {a.describe()} vs {b.describe()}"
            )
        return DominanceResult(Verdict.FIRST_DOMINATES, OrderKind.FSD, gmin, gmax)
    witness = float(xs[int(np.argmin(gap))])
    return DominanceResult(Verdict.INCOMPARABLE, None, gmin, gmax, witness_x=witness)


def crossing_point(a, b, same_mean=True):
    """The unique CDF crossing of two interior laws (equal means, distinct
    variances), located by bisection on the sign change of F_a - F_b.

    Returns x_c with |F_a(x_c) - F_b(x_c)| <= 1e-10; the bracket is also
    shrunk below 1e-12 so the location itself is sharp.
    """
    if a.kind is not LawKind.INTERIOR or b.kind is not LawKind.INTERIOR:
        raise DegeneratePointError("crossing_point is defined for interior laws only")
    if same_mean and abs(a.mean - b.mean) > MEAN_TOL:
        raise MeanMismatchError(
            f"crossing_point requires equal means, got {a.mean} vs {b.mean}; "
            "use ssd_compare for unequal-mean pairs"
        )
    if same_mean and abs(a.variance - b.variance) <= MEAN_TOL:
        raise NoCrossingError("the laws coincide (equal means and variances)")

    gap = a.cdf_values(_CHEB_GRID) - b.cdf_values(_CHEB_GRID)
    imax = int(np.argmax(gap))
    imin = int(np.argmin(gap))
    if gap[imax] <= 1e-13 or gap[imin] >= -1e-13:
        raise NoCrossingError("could not bracket a sign change of F_a - F_b")

    lo, hi = sorted((float(_CHEB_GRID[imax]), float(_CHEB_GRID[imin])))
    g = lambda x: a.cdf(x) - b.cdf(x)
    glo = g(lo)
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        gmid = g(mid)
        if (gmid > 0.0) == (glo > 0.0):
            lo, glo = mid, gmid
        else:
            hi = mid
    xc = 0.5 * (lo + hi)
    if abs(g(xc)) > 1e-10:
        raise ToleranceError(
            f"bisection finished at x={xc} with |F_a - F_b| = {abs(g(xc)):.3e} > 1e-10"
        )
    return xc


def _refine_peak(func, lo, hi):
    """Ternary search for the maximum of a unimodal function on [lo, hi]."""
    while hi - lo > 1e-12:
        third = (hi - lo) / 3.0
        m1 = lo + third
        m2 = hi - third
        if func(m1) < func(m2):
            lo = m1
        else:
            hi = m2
    return 0.5 * (lo + hi)


def mps_magnitude(a, b):
    """Size of the mean-preserving spread between two equal-mean laws.

    The integrated-CDF gap Y_dominated - Y_dominant peaks at the CDF crossing;
    the peak value equals the gap integral up to the crossing and is returned.
    Zero for equal laws; errors for unequal means or incomparable pairs.
    """
    if abs(a.mean - b.mean) > MEAN_TOL:
        raise MeanMismatchError(
            f"mps_magnitude requires equal means, got {a.mean} vs {b.mean}"
        )
    result = ssd_compare(a, b)
    if result.verdict is Verdict.EQUAL:
        return 0.0
    if result.verdict is Verdict.INCOMPARABLE:
        raise IncomparablePairError(
            f"{a.describe()} and {b.describe()} are not comparable; "
            "no mean-preserving spread relates them"
        )
    sign = 1.0 if result.verdict is Verdict.SECOND_DOMINATES else -1.0

    xs = probe_grid(a, b)
    gap = sign * (a.integrated_cdf_values(xs) - b.integrated_cdf_values(xs))
    i = int(np.argmax(gap))
    lo = float(xs[max(i - 1, 0)])
    hi = float(xs[min(i + 1, len(xs) - 1)])
    peak_fn = lambda x: sign * (a.integrated_cdf(x) - b.integrated_cdf(x))
    x_peak = _refine_peak(peak_fn, lo, hi)
    return max(0.0, float(gap[i]), peak_fn(x_peak))


def one_param_order(alpha1, alpha2):
    """Second-order comparison within the symmetric one-parameter family.

    Maps each alpha to the interior law of mean 1/2 and variance
    1/(4 (1 + 2 alpha)); the larger alpha has the smaller variance and
    dominates.
    """
    if not (alpha1 > 0.0 and alpha2 > 0.0):
        raise DomainError(f"one_param_order requires positive alphas, got ({alpha1}, {alpha2})")
    law1 = BetaLaw.interior(0.5, 0.25 / (1.0 + 2.0 * alpha1))
    law2 = BetaLaw.interior(0.5, 0.25 / (1.0 + 2.0 * alpha2))
    return ssd_compare(law1, law2)


def hasse_path(m, v):
    """The five-node verified chain through an interior point:

        delta_0  ->  two-point(m)  ->  interior(m, v)  ->  delta_m  ->  delta_1

    Every edge is checked with ssd_compare; a failed edge raises
    VerificationError (it would indicate a numerics bug, not a math
    possibility).
    """
    interior = BetaLaw.interior(m, v)  # validates (m, v) strictly inside
    nodes = (
        BetaLaw.point_mass(0.0),
        BetaLaw.two_point(m),
        interior,
        BetaLaw.point_mass(m),
        BetaLaw.point_mass(1.0),
    )
    checks = []
    for lower, upper in zip(nodes, nodes[1:]):
        res = ssd_compare(lower, upper)
        if res.verdict is not Verdict.SECOND_DOMINATES:
            raise VerificationError(
                f"edge {lower.describe()} -> {upper.describe()} failed verification: "
                f"verdict={res.verdict.value}, delta_min={res.delta_min:.3e}, "
                f"delta_max={res.delta_max:.3e}"
            )
        checks.append(res)
    return HassePath(nodes=nodes, edge_checks=tuple(checks))
