import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.optimize import brentq

from golden import BALL_K_SHOOT, DISK_K
from robin_lab import diskext, geometry
from robin_lab.errors import DomainError, SolverError

GRID = [(a, R) for a in (-0.25, -1.0, -4.0, -16.0) for R in (0.25, 1.0, 4.0)]
NORM_PAIRS = [(-1.0, 1.0), (-0.25, 4.0), (-4.0, 0.25), (-2.0, 0.5), (-16.0, 4.0)]

alphas = st.floats(min_value=-30.0, max_value=-0.1)
radii = st.floats(min_value=0.1, max_value=10.0)


def scipy_root(alpha, R):
    f = lambda k: k * sc.k1e(k * R) + alpha * sc.k0e(k * R)
    lo = math.sqrt(max(0.0, alpha * alpha + alpha / R)) or 1e-12
    return brentq(f, lo, -alpha, xtol=1e-300, rtol=1e-15)


@pytest.mark.parametrize("key", list(DISK_K))
def test_golden_roots(key):
    alpha, R = key
    sol = diskext.solve_disk_exterior_2d(alpha, R)
    assert abs(sol.k / float(DISK_K[key]) - 1.0) < 1e-13
    assert sol.lam == -sol.k ** 2


@pytest.mark.parametrize("alpha,R", GRID)
def test_bounds_and_residual(alpha, R):
    sol = diskext.solve_disk_exterior_2d(alpha, R)
    lo, hi = diskext.bounds_2d(alpha, R)
    assert lo < sol.lam < hi
    assert sol.residual < 1e-12
    assert sol.k == pytest.approx(scipy_root(alpha, R), rel=1e-13)


def test_example_alpha_minus_one():
    lam = diskext.disk_lambda(-1.0, 1.0)
    assert -1.0 < lam < 0.0


@pytest.mark.parametrize("alpha,R", GRID)
def test_derivatives_match_finite_differences(alpha, R):
    h = 1e-5 * R
    fd = (diskext.disk_lambda(alpha, R + h) - diskext.disk_lambda(alpha, R - h)) / (2 * h)
    assert diskext.dlambda_dR(alpha, R) == pytest.approx(fd, rel=1e-6)
    h = 1e-5 * abs(alpha)
    fd = (diskext.disk_lambda(alpha + h, R) - diskext.disk_lambda(alpha - h, R)) / (2 * h)
    assert diskext.dlambda_dalpha_disk(alpha, R) == pytest.approx(fd, rel=1e-6)


def test_derivative_signs():
    # strictly decreasing in R, increasing in alpha
    for alpha, R in GRID:
        assert diskext.dlambda_dR(alpha, R) < 0
        assert diskext.dlambda_dalpha_disk(alpha, R) > 0


def test_monotone_in_R_and_concave_increasing_in_alpha():
    R = np.linspace(0.25, 4.0, 100)
    lam = np.array([diskext.disk_lambda(-1.0, r) for r in R])
    assert np.all(np.diff(lam) < 0)
    alpha = np.linspace(-4.0, -0.25, 100)
    lam = np.array([diskext.disk_lambda(a, 1.0) for a in alpha])
    assert np.all(np.diff(lam) > 0)
    assert np.all(np.diff(lam, 2) < 0)


@pytest.mark.parametrize("s", [0.5, 2.0, 10.0])
def test_scaling_covariance(s):
    for alpha, R in GRID:
        lam = diskext.disk_lambda(alpha, R)
        assert s * s * diskext.disk_lambda(alpha / s, s * R) == pytest.approx(lam, rel=1e-9)


@pytest.mark.parametrize("alpha,R", NORM_PAIRS)
def test_normalization_identity_by_quadrature(alpha, R):
    k = diskext.solve_disk_exterior_2d(alpha, R).k
    # scipy's K0 as the independent integrand; e^{2kR} scaling keeps it in range
    f = lambda r: (sc.k0e(k * r) * math.exp(-k * (r - R))) ** 2 * r
    val, _ = quad(f, R, math.inf, epsabs=0.0, epsrel=1e-12, limit=400)
    closed = 0.5 * R * R * (sc.k1e(k * R) ** 2 - sc.k0e(k * R) ** 2)
    assert 2 * math.pi * val == pytest.approx(2 * math.pi * closed, rel=1e-8)


def test_eigenfunction_normalized_and_robin_condition():
    sol = diskext.solve_disk_exterior_2d(-1.0, 1.0)
    val, _ = quad(lambda r: 2 * math.pi * diskext.eigenfunction_disk(sol, r) ** 2 * r, 1.0, math.inf, epsrel=1e-12)
    assert val == pytest.approx(1.0, rel=1e-10)
    # outward normal of the exterior at r = R points to -r: -u'(R) + alpha u(R) = 0
    u = diskext.eigenfunction_disk(sol, 1.0)
    du = diskext.eigenfunction_disk_derivative(sol, 1.0)
    assert -du + sol.alpha * u == pytest.approx(0.0, abs=1e-14)
    # boundary L2 norm equals the alpha derivative (Hellmann-Feynman)
    assert 2 * math.pi * u * u == pytest.approx(diskext.dlambda_dalpha_disk(-1.0, 1.0), rel=1e-12)
    with pytest.raises(DomainError):
        diskext.eigenfunction_disk(sol, 0.5)


def test_eigenfunction_large_kR_no_overflow():
    sol = diskext.solve_disk_exterior_2d(-400.0, 4.0)
    assert math.isfinite(diskext.eigenfunction_disk(sol, 4.0))
    assert diskext.eigenfunction_disk(sol, 5.0) < 1e-100


def test_ball_closed_form_and_shooting_oracle():
    assert diskext.solve_ball_exterior_3d(-2.0, 1.0) == -1.0
    assert -diskext.solve_ball_exterior_3d(-2.0, 1.0) == pytest.approx(BALL_K_SHOOT ** 2, rel=1e-12)
    assert diskext.solve_ball_exterior_3d(-0.5, 1.0) == 0.0  # no bound state above -1/R
    assert diskext.solve_ball_exterior_3d(-1.0, 1.0) == 0.0


def test_errors():
    with pytest.raises(DomainError, match="no discrete eigenvalue"):
        diskext.solve_disk_exterior_2d(0.5, 1.0)
    with pytest.raises(DomainError):
        diskext.solve_disk_exterior_2d(-1.0, 0.0)
    with pytest.raises(DomainError):
        diskext.solve_disk_exterior_2d(-1.0, 1.0, tol=0.0)
    with pytest.raises(SolverError, match="underflows"):
        diskext.solve_disk_exterior_2d(-0.001, 1.0)


def test_weak_coupling_root_is_tiny_but_accurate():
    sol = diskext.solve_disk_exterior_2d(-0.02, 1.0)
    assert sol.k == pytest.approx(float(DISK_K[(-0.02, 1.0)]), rel=1e-13)
    assert sol.lam < 0


def test_quantitative_gap():
    bound, gap = diskext.quantitative_gap(-1.0, 2 * math.pi, math.pi)
    assert gap == 0.0
    assert bound == diskext.disk_lambda(-1.0, 1.0)
    c = geometry.ellipse(2.0, 1.0)
    bound, gap = diskext.quantitative_gap(-1.0, c.perimeter, c.area)
    assert gap > 0
    R1 = c.perimeter / (2 * math.pi)
    assert bound == pytest.approx(diskext.disk_lambda(-1.0, R1), rel=1e-15)
    with pytest.raises(DomainError):
        diskext.quantitative_gap(-1.0, 1.0, 1.0)


@settings(max_examples=60, deadline=None)
@given(alphas, radii)
def test_bounds_property(alpha, R):
    sol = diskext.solve_disk_exterior_2d(alpha, R)
    lo, hi = diskext.bounds_2d(alpha, R)
    assert lo < sol.lam < hi


@settings(max_examples=40, deadline=None)
@given(alphas, radii, radii)
def test_gap_nonnegative_property(alpha, L_scale, ratio):
    # any area up to the isoperimetric maximum is feasible
    L = 2 * math.pi * L_scale
    area = L * L / (4 * math.pi) * min(1.0, 1.0 / ratio)
    _, gap = diskext.quantitative_gap(alpha, L, area)
    assert gap >= 0
