"""CARA portfolio: Laplace transform, expected utility, optimal allocation."""

import math

import numpy as np
import pytest

import oracles
from betadome import (
    BetaLaw,
    PortfolioProblem,
    Saturation,
    closed_form_boundary_gamma,
    expected_utility,
    in_full_risk_region,
    laplace_transform,
    mean_threshold,
    optimal_gamma,
    parabola,
    ssd_compare,
    Verdict,
)
from betadome.errors import DomainError
from betadome.special import ShapeParams


def uniform_law():
    return BetaLaw.from_shape_params(ShapeParams(1.0, 1.0))


# ----------------------------------------------------------------------
# Laplace transform.


def test_laplace_at_zero_is_one():
    for law in (uniform_law(), BetaLaw.interior(0.3, 0.1),
                BetaLaw.two_point(0.7), BetaLaw.point_mass(0.4)):
        assert laplace_transform(law, 0.0) == 1.0


def test_laplace_discrete_closed_forms():
    for s in (0.5, 4.0, 25.0):
        assert laplace_transform(BetaLaw.point_mass(0.4), s) == math.exp(-s * 0.4)
        got = laplace_transform(BetaLaw.two_point(0.7), s)
        assert abs(got - oracles.two_point_laplace(0.7, s)) <= 1e-16


def test_laplace_uniform_closed_form():
    u = uniform_law()
    for s in (0.1, 1.0, 4.0, 25.0, 60.0):
        assert abs(laplace_transform(u, s) - oracles.uniform_laplace(s)) <= 1e-12


def test_laplace_interior_vs_quadrature():
    rng = np.random.default_rng(61)
    for a, b in oracles.sample_shapes(rng, 10, lo=0.4, hi=12.0):
        law = BetaLaw.from_shape_params(ShapeParams(a, b))
        for s in (0.5, 4.0, 12.0, 30.0):
            got = laplace_transform(law, s)
            want = oracles.quad_laplace(a, b, s)
            assert abs(got - want) <= 1e-9 * max(want, 1e-6), (a, b, s)


def test_laplace_decreasing_and_convex_in_s():
    law = BetaLaw.interior(0.6, 0.08)
    ss = np.linspace(0.0, 40.0, 81)
    vals = np.array([laplace_transform(law, float(s)) for s in ss])
    assert np.all(np.diff(vals) < 0.0)
    assert np.all(np.diff(vals, 2) > -1e-12)


# ----------------------------------------------------------------------
# Expected utility.


def test_expected_utility_at_zero_exposure():
    p = PortfolioProblem(BetaLaw.interior(0.3, 0.1), 4.0, 0.05)
    want = -math.exp(-4.0 * 1.05)
    assert abs(expected_utility(p, 0.0) - want) <= 1e-15


def test_expected_utility_uniform_closed_form():
    p = PortfolioProblem(uniform_law(), 4.0, 0.05)
    for g in (0.0, 0.25, 0.5, 0.75, 1.0):
        want = -math.exp(-4.0 * (1.05 - 0.05 * g)) * oracles.uniform_laplace(4.0 * g)
        assert abs(expected_utility(p, g) - want) <= 1e-14


def test_expected_utility_wealth_scaling():
    # Only lambda * wealth matters, so (lam, W0) = (2, 3) matches (6, 1).
    law = BetaLaw.interior(0.4, 0.06)
    pa = PortfolioProblem(law, 2.0, 0.05, wealth=3.0)
    pb = PortfolioProblem(law, 6.0, 0.05, wealth=1.0)
    assert pa.lam_eff == pb.lam_eff == 6.0
    for g in (0.2, 0.7):
        assert expected_utility(pa, g) == expected_utility(pb, g)


def test_expected_utility_concave_in_gamma():
    rng = np.random.default_rng(62)
    gs = np.linspace(0.0, 1.0, 33)
    for m, v in oracles.sample_mv(rng, 5, margin=0.1):
        p = PortfolioProblem(BetaLaw.interior(m, v), 6.0, 0.05)
        eu = np.array([expected_utility(p, float(g)) for g in gs])
        assert np.all(np.diff(eu, 2) <= 1e-10), (m, v)


def test_ssd_dominant_law_never_has_lower_expected_utility():
    rng = np.random.default_rng(63)
    for _ in range(15):
        m = float(rng.uniform(0.2, 0.8))
        top = parabola(m)
        f1, f2 = np.sort(rng.uniform(0.05, 0.95, size=2))
        if f2 - f1 < 0.05:
            continue
        lo, hi = BetaLaw.interior(m, f1 * top), BetaLaw.interior(m, f2 * top)
        assert ssd_compare(hi, lo).verdict is Verdict.SECOND_DOMINATES
        for lam in (2.0, 10.0):
            for g in (0.0, 0.25, 0.5, 0.75, 1.0):
                eu_lo = expected_utility(PortfolioProblem(lo, lam, 0.05), g)
                eu_hi = expected_utility(PortfolioProblem(hi, lam, 0.05), g)
                assert eu_lo >= eu_hi - 1e-12, (m, f1, f2, lam, g)


# ----------------------------------------------------------------------
# Optimal allocation.


def test_optimal_gamma_uniform_saturates_at_low_aversion():
    r = optimal_gamma(PortfolioProblem(uniform_law(), 4.0, 0.05))
    assert r.gamma_star == 1.0
    assert r.boundary_active is Saturation.AT_ONE


def test_optimal_gamma_uniform_interior_at_high_aversion():
    p = PortfolioProblem(uniform_law(), 25.0, 0.05)
    r = optimal_gamma(p)
    assert r.boundary_active is Saturation.NONE
    assert 0.0 < r.gamma_star < 1.0
    gs = np.linspace(0.0, 1.0, 100001)
    eu = -np.exp(-25.0 * (1.05 - 0.05 * gs)) * np.array(
        [oracles.uniform_laplace(25.0 * g) for g in gs]
    )
    assert abs(gs[int(np.argmax(eu))] - r.gamma_star) <= 1e-4
    assert r.eu_at_optimum >= eu.max() - 1e-15
    assert r.eu_at_optimum == expected_utility(p, r.gamma_star)


def test_optimal_gamma_zero_when_mean_below_rate():
    r = optimal_gamma(PortfolioProblem(BetaLaw.interior(0.04, 0.01), 4.0, 0.05))
    assert r.gamma_star == 0.0 and r.boundary_active is Saturation.AT_ZERO
    r = optimal_gamma(PortfolioProblem(BetaLaw.point_mass(0.03), 4.0, 0.05))
    assert r.gamma_star == 0.0 and r.boundary_active is Saturation.AT_ZERO
    # Tie m == rate: every allocation is optimal; the documented pick is 0.
    r = optimal_gamma(PortfolioProblem(BetaLaw.point_mass(0.05), 4.0, 0.05))
    assert r.gamma_star == 0.0 and r.boundary_active is Saturation.AT_ZERO


def test_optimal_gamma_point_mass_above_rate_goes_all_in():
    r = optimal_gamma(PortfolioProblem(BetaLaw.point_mass(0.6), 4.0, 0.05))
    assert r.gamma_star == 1.0 and r.boundary_active is Saturation.AT_ONE


def test_optimal_gamma_two_point_matches_closed_form():
    rng = np.random.default_rng(64)
    for _ in range(10):
        rate = float(rng.uniform(0.01, 0.15))
        m = float(rng.uniform(rate + 0.05, 0.98))
        lam = float(rng.uniform(0.5, 25.0))
        want = closed_form_boundary_gamma(m, lam, rate)
        got = optimal_gamma(PortfolioProblem(BetaLaw.two_point(m), lam, rate))
        assert abs(got.gamma_star - want) <= 1e-6, (m, lam, rate)
        if want < 1.0:
            assert got.boundary_active is Saturation.NONE
        else:
            assert got.boundary_active is Saturation.AT_ONE


def test_optimal_gamma_sandwiched_by_worst_case():
    # The two-point law with the same mean is the SSD-minimal member, so its
    # optimal exposure is a floor for every law of that mean.
    rng = np.random.default_rng(65)
    for _ in range(200):
        rate = float(rng.uniform(0.02, 0.12))
        m = float(rng.uniform(rate + 0.05, 0.95))
        v = float(rng.uniform(0.05, 0.95)) * parabola(m)
        lam = float(rng.uniform(1.0, 20.0))
        floor = closed_form_boundary_gamma(m, lam, rate)
        got = optimal_gamma(PortfolioProblem(BetaLaw.interior(m, v), lam, rate))
        assert floor - 1e-6 <= got.gamma_star <= 1.0, (m, v, lam, rate)


def test_two_point_marginal_utility_sign_pattern():
    # For the two-point law, d/dgamma EU has the sign of
    # m (1-r) e^{-lam g} - (1-m) r; checked by central differences on a grid.
    h = 1e-7
    for m in (0.2, 0.5, 0.8):
        law = BetaLaw.two_point(m)
        for rate in (0.03, 0.1):
            for lam in (1.0, 4.0, 12.0):
                p = PortfolioProblem(law, lam, rate)
                for g in (0.1, 0.3, 0.5, 0.7, 0.9):
                    sign_expr = m * (1.0 - rate) * math.exp(-lam * g) - (1.0 - m) * rate
                    deriv = (expected_utility(p, g + h) - expected_utility(p, g - h)) / (2 * h)
                    if abs(sign_expr) < 1e-10:
                        continue
                    assert math.copysign(1.0, deriv) == math.copysign(1.0, sign_expr), \
                        (m, rate, lam, g, deriv, sign_expr)


def test_optimal_gamma_stable_under_small_shifts():
    # Interior optimum moves by < 0.02 under 1e-4 nudges of any parameter.
    base_args = (0.5, 1.0 / 12.0, 25.0, 0.05)
    base = optimal_gamma(
        PortfolioProblem(BetaLaw.interior(0.5, 1.0 / 12.0), 25.0, 0.05))
    assert base.boundary_active is Saturation.NONE
    for i in range(4):
        for sgn in (-1.0, 1.0):
            m, v, lam, rate = base_args
            nudged = [m, v, lam, rate]
            nudged[i] += sgn * 1e-4
            moved = optimal_gamma(
                PortfolioProblem(BetaLaw.interior(nudged[0], nudged[1]),
                                 nudged[2], nudged[3]))
            assert moved.boundary_active is Saturation.NONE
            assert abs(moved.gamma_star - base.gamma_star) < 0.02, (i, sgn)


def test_portfolio_problem_validation():
    law = uniform_law()
    with pytest.raises(DomainError):
        PortfolioProblem(law, 0.0, 0.05)
    with pytest.raises(DomainError):
        PortfolioProblem(law, -1.0, 0.05)
    with pytest.raises(DomainError):
        PortfolioProblem(law, 4.0, 0.0)
    with pytest.raises(DomainError):
        PortfolioProblem(law, 4.0, 1.0)
    with pytest.raises(DomainError):
        PortfolioProblem(law, 4.0, 0.05, wealth=0.0)


# ----------------------------------------------------------------------
# Closed forms: boundary gamma and mean threshold.


def test_closed_form_boundary_gamma_anchor():
    got = closed_form_boundary_gamma(0.5, 4.0, 0.05)
    assert got == math.log(19.0) / 4.0


def test_closed_form_boundary_gamma_monotone_in_mean():
    vals = [closed_form_boundary_gamma(m, 4.0, 0.05)
            for m in np.linspace(0.08, 0.99, 40)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))
    assert vals[0] > 0.0
    assert vals[-1] == 1.0


def test_closed_form_boundary_gamma_validation():
    with pytest.raises(DomainError):
        closed_form_boundary_gamma(0.05, 4.0, 0.05)
    with pytest.raises(DomainError):
        closed_form_boundary_gamma(0.04, 4.0, 0.05)
    with pytest.raises(DomainError):
        closed_form_boundary_gamma(1.0, 4.0, 0.05)
    with pytest.raises(DomainError):
        closed_form_boundary_gamma(0.5, 0.0, 0.05)


def test_mean_threshold_anchor_and_saturation():
    got = mean_threshold(4.0, 0.05)
    want = 0.05 * math.exp(4.0) / (0.05 * math.exp(4.0) + 0.95)
    assert abs(got - want) <= 1e-15
    assert abs(closed_form_boundary_gamma(got, 4.0, 0.05) - 1.0) <= 1e-10
    assert closed_form_boundary_gamma(min(got + 1e-4, 0.999), 4.0, 0.05) == 1.0
    assert closed_form_boundary_gamma(got - 1e-4, 4.0, 0.05) < 1.0


def test_mean_threshold_monotone():
    lams = [1.0, 2.0, 4.0, 8.0]
    vals = [mean_threshold(lam, 0.05) for lam in lams]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    rates = [0.02, 0.05, 0.1, 0.2]
    vals = [mean_threshold(4.0, r) for r in rates]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    for lam, r in ((0.5, 0.01), (30.0, 0.3)):
        assert r < mean_threshold(lam, r) < 1.0


def test_in_full_risk_region():
    m_hat = mean_threshold(4.0, 0.05)
    assert in_full_risk_region(m_hat + 0.01, 0.02, 4.0, 0.05)
    assert not in_full_risk_region(m_hat - 0.01, 0.02, 4.0, 0.05)
    assert not in_full_risk_region(0.5, 0.3, 4.0, 0.05)


def test_full_risk_region_backed_by_optimizer():
    m_hat = mean_threshold(4.0, 0.05)
    for m in (m_hat + 0.005, 0.9):
        for frac in (0.1, 0.6, 0.95):
            law = BetaLaw.interior(m, frac * parabola(m))
            r = optimal_gamma(PortfolioProblem(law, 4.0, 0.05))
            assert r.gamma_star == 1.0, (m, frac)
