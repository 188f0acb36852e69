"""Large-coupling models and the logarithmic cutoff energy.

As alpha -> -infinity the lowest eigenvalue behaves like
-alpha^2 - alpha * c + o(alpha), where c is the largest mean curvature of the
boundary (1/R for a disk, (d-1)/R for a ball, (d-2)/r on the caps of a
spherocylinder). The counterexample reports compare such asymptotes with
exact disk/ball values. The o(alpha) remainder is unknown, so every verdict
demands that the leading-order gap beat an explicit remainder allowance, and
every report carries ``"asymptotic": True``.
"""

import decimal
import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import diskext, geometry
from .errors import DomainError


@dataclass(frozen=True)
class AsymptoticModel:
    dimension: int
    curvature: float  # coefficient of -alpha in lambda ~ -alpha^2 - alpha * curvature

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise DomainError("only d = 2 and d = 3 are modelled")
        if not self.curvature > 0:
            raise DomainError("effective curvature must be positive")

    def value(self, alpha):
        return -alpha * alpha - alpha * self.curvature


def log_cutoff_energy(n, alpha, perimeter):
    """Upper bound 2 pi / log(n) + alpha |Sigma| for the form on the log cutoff.

    The test function equals 1 on the disk of radius n, decays like
    log(n^2 / r) / log(n) up to r = n^2 and vanishes outside; its Dirichlet
    energy in the plane is 2 pi / log(n). Valid once the set lies inside
    the disk of radius n. Returns (energy, threshold), where threshold is the
    smallest integer n >= 2 with negative energy (an exact int, possibly huge).
    """
    if n < 2:
        raise DomainError("cutoff radius n must be >= 2")
    if not perimeter > 0:
        raise DomainError("perimeter must be positive")
    energy = 2.0 * math.pi / math.log(n) + alpha * perimeter
    if alpha >= 0:
        return energy, None
    # negative iff log n > 2 pi / (|alpha| |Sigma|)
    x = 2.0 * math.pi / (-alpha * perimeter)
    digits = int(x / math.log(10)) + 30
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        bound = decimal.Decimal(x).exp()
        threshold = int(bound.to_integral_value(rounding=decimal.ROUND_FLOOR)) + 1
    return energy, max(2, threshold)


def _crossover(g, scale, rtol=1e-12):
    """alpha* < 0 where g changes sign from <= 0 (weak coupling) to > 0 (strong coupling).

    The sign change is bracketed by doubling |alpha| and then refined with
    Brent's method (bisection-safeguarded). None if no sign change is found.
    """
    g = functools.lru_cache(maxsize=None)(g)  # brentq re-evaluates the bracket ends
    # start at the natural scale; weak-coupling solves are the slow ones
    lo = hi = -1.0 / scale
    if g(lo) > 0:
        while True:
            hi *= 0.5
            if hi > -1e-2 / scale:
                return None
            if g(hi) <= 0:
                break
            lo = hi
    else:
        while True:
            lo *= 2.0
            if lo < -1e12 / scale:
                return None
            if g(lo) > 0:
                break
            hi = lo
    return brentq(g, lo, hi, xtol=1e-300, rtol=max(rtol, 4.0 * np.finfo(float).eps))


def two_disks_2d(alpha, r3, remainder=None):
    """Two disjoint disks of radius r3 against the equal-perimeter and equal-area disks.

    lambda(Omega) is replaced by its asymptote -alpha^2 - alpha/r3. A reversed
    inequality is reported only when the asymptote exceeds the exact disk
    eigenvalue by more than ``remainder`` (default 1/r3^2, four times the
    O(1) term -1/(4 r3^2) of a single disk's expansion).
    """
    if not alpha < 0:
        raise DomainError("no discrete eigenvalue for alpha >= 0")
    if not r3 > 0:
        raise DomainError("disk radius must be positive")
    if remainder is None:
        remainder = 1.0 / (r3 * r3)
    R1 = 2.0 * r3
    R2 = math.sqrt(2.0) * r3
    model = AsymptoticModel(2, 1.0 / r3)

    def gap(a, R):
        return model.value(a) - diskext.disk_lambda(a, R)

    lam_asym = model.value(alpha)
    lam1 = diskext.disk_lambda(alpha, R1)
    lam2 = diskext.disk_lambda(alpha, R2)
    rev1 = lam_asym - lam1 > remainder
    rev2 = lam_asym - lam2 > remainder
    return {
        "kind": "2d",
        "asymptotic": True,
        "alpha": alpha,
        "r3": r3,
        "R1": R1,
        "R2": R2,
        "lambda_omega_asymptotic": lam_asym,
        "lambda_R1": lam1,
        "lambda_R2": lam2,
        "remainder_allowance": remainder,
        "reversed_isoperimetric": rev1,
        "reversed_isochoric": rev2,
        "reversed": rev1 and rev2,
        "crossover_alpha_isoperimetric": _crossover(lambda a: gap(a, R1) - remainder, r3),
        "crossover_alpha_isochoric": _crossover(lambda a: gap(a, R2) - remainder, r3),
    }


def spherocylinder_axis(r, R, constraint="area"):
    """Axis length making the hull of two r-balls match the R-ball's area or volume."""
    if not (r > 0 and R > 0):
        raise DomainError("radii must be positive")
    if r > R:
        raise DomainError(f"constraint infeasible: r={r} > R={R} would need a negative axis length")
    if constraint == "area":
        return 2.0 * (R * R - r * r) / r
    if constraint == "volume":
        return 4.0 * (R ** 3 - r ** 3) / (3.0 * r * r)
    raise DomainError(f"unknown constraint {constraint!r}; use 'area' or 'volume'")


def hull_3d(alpha, r, R, d=3, constraint="area", remainder=None):
    """Convex hull of two small balls against a ball of radius R in R^3."""
    if d != 3:
        raise DomainError("the hull counterexample is implemented for d = 3 only")
    if not alpha < 0:
        raise DomainError("alpha must be negative")
    L_axis = spherocylinder_axis(r, R, constraint)
    surf = geometry.surface_spherocylinder(r, L_axis)
    ball = geometry.surface_sphere(R)
    if remainder is None:
        remainder = 1.0 / (r * r)
    hull_model = AsymptoticModel(3, (d - 2) / r)
    ball_model = AsymptoticModel(3, (d - 1) / R)
    hull_asym = hull_model.value(alpha)
    ball_asym = ball_model.value(alpha)
    ball_exact = diskext.solve_ball_exterior_3d(alpha, R)
    criterion = r < (d - 2) / (d - 1) * R
    leading = ball_asym < hull_asym
    return {
        "kind": "3d",
        "asymptotic": True,
        "alpha": alpha,
        "r": r,
        "R": R,
        "constraint": constraint,
        "L_axis": L_axis,
        "hull_area": surf.area,
        "hull_volume": surf.volume,
        "ball_area": ball.area,
        "ball_volume": ball.volume,
        "hull_asymptote": hull_asym,
        "ball_asymptote": ball_asym,
        "ball_exact": ball_exact,
        "criterion": criterion,
        "reversed_leading_order": leading,
        "remainder_allowance": remainder,
        "reversed": leading and criterion and hull_asym - ball_exact > remainder,
    }
