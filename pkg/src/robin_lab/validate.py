"""Named invariant suite run by ``robin-lab validate``.

Each check returns (ok, detail). Checks are cheap (coarse meshes, small
grids) so the whole suite runs in a few seconds.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from . import asympt, diskext, fem2d, geometry, sl1d, specfun

GRID_ALPHA = (-0.25, -1.0, -4.0, -16.0)
GRID_R = (0.25, 1.0, 4.0)
GRID = tuple((a, R) for a in GRID_ALPHA for R in GRID_R)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _rel(a, b):
    return abs(a - b) / abs(b)


def check_wronskian():
    x = np.logspace(-6, 6, 200)
    # scaled factors cancel: I0e K1e + I1e K0e = x^{-1}
    w = specfun.bessel_i0e(x) * specfun.bessel_k1e(x) + specfun.bessel_i1e(x) * specfun.bessel_k0e(x)
    err = float(np.max(np.abs(w * x - 1.0)))
    return err < 1e-12, f"max rel err {err:.2e}"


def check_k_monotone():
    x = np.logspace(-5, 2.5, 400)
    ok = bool(np.all(np.diff(specfun.bessel_k0(x)) < 0) and np.all(np.diff(specfun.bessel_k1(x)) < 0))
    return ok, "K0, K1 strictly decreasing on 400 points"


def check_ratio_sandwich():
    x = np.logspace(-6, 6, 400)
    r = specfun.k_ratio(x)
    lower = x / (0.5 + x + np.sqrt(0.25 + x * x))
    ok = bool(np.all(lower < r) and np.all(r < 1.0))
    return ok, f"min(ratio - lower) {float(np.min(r - lower)):.2e}"


def check_disk_bounds():
    worst = math.inf
    for a, R in GRID:
        lam = diskext.disk_lambda(a, R)
        lo, hi = diskext.bounds_2d(a, R)
        worst = min(worst, lam - lo, hi - lam)
    return worst > 0, f"min distance to bounds {worst:.3e}"


def check_disk_residual():
    worst = max(diskext.solve_disk_exterior_2d(a, R).residual for a, R in GRID)
    return worst < 1e-12, f"max scaled residual {worst:.2e}"


def check_radius_monotone():
    R = np.linspace(0.25, 4.0, 100)
    lam = np.array([diskext.disk_lambda(-1.0, r) for r in R])
    bad = int(np.sum(np.diff(lam) >= 0))
    return bad == 0, f"{bad} violations in 100-point R sweep"


def check_alpha_concave():
    alpha = np.linspace(-4.0, -0.25, 100)
    lam = np.array([diskext.disk_lambda(a, 1.0) for a in alpha])
    bad = int(np.sum(np.diff(lam) <= 0) + np.sum(np.diff(lam, 2) >= 0))
    return bad == 0, f"{bad} violations in 100-point alpha sweep"


def check_derivatives():
    worst = 0.0
    for a, R in GRID:
        h = 1e-5 * R
        fd = (diskext.disk_lambda(a, R + h) - diskext.disk_lambda(a, R - h)) / (2 * h)
        worst = max(worst, _rel(diskext.dlambda_dR(a, R), fd))
        h = 1e-5 * abs(a)
        fd = (diskext.disk_lambda(a + h, R) - diskext.disk_lambda(a - h, R)) / (2 * h)
        worst = max(worst, _rel(diskext.dlambda_dalpha_disk(a, R), fd))
    return worst < 1e-6, f"max rel err vs central differences {worst:.2e}"


def check_scaling():
    worst = 0.0
    for a, R in GRID:
        lam = diskext.disk_lambda(a, R)
        for s in (0.5, 2.0, 10.0):
            worst = max(worst, _rel(s * s * diskext.disk_lambda(a / s, s * R), lam))
    return worst < 1e-9, f"max rel err {worst:.2e}"


def check_normalization():
    worst = 0.0
    for a, R in ((-1.0, 1.0), (-0.25, 4.0), (-4.0, 0.25), (-2.0, 0.5), (-16.0, 4.0)):
        sol = diskext.solve_disk_exterior_2d(a, R)
        k = sol.k
        # integrate e^{2kR} K0(kr)^2 r to stay in range for large kR
        f = lambda r: (specfun.bessel_k0e(k * r) * math.exp(-k * (r - R))) ** 2 * r
        val, _ = quad(f, R, math.inf, epsabs=0.0, epsrel=1e-12, limit=200)
        k0, k1 = specfun.k_pair_scaled(k * R)
        closed = 0.5 * R * R * (k1 * k1 - k0 * k0)
        worst = max(worst, _rel(val, closed))
    return worst < 1e-8, f"max rel err {worst:.2e}"


def check_sl1d_oracles():
    a, R = -1.0, 1.0
    lam2, _ = sl1d.solve_extrapolated(a, sl1d.WeightPoly.disk(R), n=1024)
    # in 3D the coupling must beat -1/R for a bound state
    lam3, _ = sl1d.solve_extrapolated(-2.0, sl1d.WeightPoly.ball(R), n=1024)
    e2 = abs(lam2 - diskext.disk_lambda(a, R))
    e3 = abs(lam3 - diskext.solve_ball_exterior_3d(-2.0, R))
    return max(e2, e3) < 1e-6, f"disk err {e2:.2e}, ball err {e3:.2e}"


def check_gauss_bonnet():
    curves = [geometry.disk(1.0), geometry.ellipse(2.0, 1.0), geometry.ellipse(3.0, 1.0),
              geometry.support_poly([1.0, 0.0, 0.1])]
    worst = max(abs(c.total_curvature() - 2.0 * math.pi) for c in curves)
    return worst < 1e-8, f"max |int kappa ds - 2 pi| {worst:.2e}"


def check_isoperimetric():
    d0 = geometry.isoperimetric_check(geometry.disk(1.0))
    d1 = geometry.isoperimetric_check(geometry.ellipse(2.0, 1.0))
    return abs(d0) < 1e-8 and d1 > 0, f"disk {d0:.2e}, ellipse(2,1) {d1:.4f}"


def check_minkowski():
    sphere = geometry.surface_sphere(1.0).minkowski_defect()
    rods = [geometry.surface_spherocylinder(1.0, L).minkowski_defect() for L in (0.1, 1.0, 4.0)]
    return sphere == 0.0 and min(rods) > 0, f"sphere {sphere:.1e}, min spherocylinder {min(rods):.3e}"


def check_fem_disk():
    lam = fem2d.solve_exterior(geometry.disk(1.0), -1.0, Ns=32, Nt=128).lam
    err = abs(lam - diskext.disk_lambda(-1.0, 1.0))
    return err < 1e-3, f"Ns=32 Nt=128 err {err:.2e}"


def check_fem_ellipse():
    rep = fem2d.verify_theorem(geometry.ellipse_with_perimeter(2.0), -1.0, Ns=64, Nt=128)
    ok = rep["margin_iso"] > 3 * rep["mesh_error_estimate"] and rep["margin_icho"] >= rep["margin_iso"]
    return ok, f"margin_iso {rep['margin_iso']:.4e}, error estimate {rep['mesh_error_estimate']:.1e}"


def check_counterexamples():
    r2 = asympt.two_disks_2d(-50.0, 1.0)
    r3 = asympt.hull_3d(-100.0, 0.3, 1.0)
    weak = asympt.two_disks_2d(-0.05, 1.0)
    ok = r2["reversed"] and r3["reversed"] and r3["criterion"] and not weak["reversed"]
    return ok, f"2d reversed {r2['reversed']}, 3d reversed {r3['reversed']}, weak 2d {weak['reversed']}"


def check_log_cutoff():
    e, n = asympt.log_cutoff_energy(10, -1.0, 2.0 * math.pi)
    return e < 0 and n == 3, f"energy {e:.4f}, threshold n = {n}"


def check_quantitative_gap():
    c = geometry.ellipse(2.0, 1.0)
    _, gap = diskext.quantitative_gap(-1.0, c.perimeter, c.area)
    _, gap0 = diskext.quantitative_gap(-1.0, 2.0 * math.pi, math.pi)
    return gap > 0 and gap0 == 0.0, f"ellipse gap {gap:.4e}, disk gap {gap0}"


CHECKS = (
    ("bessel_wronskian", check_wronskian),
    ("bessel_k_monotone", check_k_monotone),
    ("k_ratio_sandwich", check_ratio_sandwich),
    ("disk_bounds", check_disk_bounds),
    ("disk_residual", check_disk_residual),
    ("disk_radius_monotone", check_radius_monotone),
    ("disk_alpha_increasing_concave", check_alpha_concave),
    ("disk_derivative_formulas", check_derivatives),
    ("disk_scaling_covariance", check_scaling),
    ("normalization_identity", check_normalization),
    ("sl1d_oracles", check_sl1d_oracles),
    ("gauss_bonnet", check_gauss_bonnet),
    ("isoperimetric_defect", check_isoperimetric),
    ("minkowski_inequality", check_minkowski),
    ("fem_disk", check_fem_disk),
    ("fem_ellipse_margin", check_fem_ellipse),
    ("counterexample_verdicts", check_counterexamples),
    ("log_cutoff_negative", check_log_cutoff),
    ("quantitative_gap", check_quantitative_gap),
)


def run_all():
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed invariant, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail))
    return results
