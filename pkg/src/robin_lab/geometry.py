"""Smooth convex planar curves from support functions, plus a 3D body catalog.

A convex curve is stored through its support function h(theta) sampled on a
uniform grid. The radius of curvature is rho = h + h'' and must be positive;
arc length is s(theta) = int_0^theta rho, the perimeter is int h dtheta and
the area is (1/2) int h rho dtheta.

Curvature here is the geometric curvature kappa_g = 1/rho >= 0. The signed
curvature with respect to the outer normal of the enclosed set is -kappa_g,
so the Jacobian of the exterior parallel coordinates is 1 + kappa_g t.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotStrictlyConvexError

DEFAULT_N_THETA = 2048


class ConvexCurve:
    """Strictly convex closed curve built from a support function.

    ``support`` is either a callable h(theta) accepting arrays or an array of
    samples on theta_j = 2 pi j / n_theta. Derivatives are spectral, so the
    tables are accurate to rounding for analytic support functions.
    """

    def __init__(self, support, n_theta=DEFAULT_N_THETA, name="curve"):
        if callable(support):
            if n_theta < 8 or n_theta % 2:
                raise DomainError("n_theta must be an even integer >= 8")
            theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
            h = np.asarray(support(theta), dtype=float) * np.ones_like(theta)
        else:
            h = np.asarray(support, dtype=float)
            n_theta = h.size
            if h.ndim != 1 or n_theta < 8 or n_theta % 2:
                raise DomainError("support samples must be a 1D array of even length >= 8")
            theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
        if not np.all(np.isfinite(h)):
            raise DomainError("support function has non-finite samples")
        self.name = name
        self.n_theta = n_theta
        self.theta = theta
        self.h = h

        coef = np.fft.rfft(h)
        # round-off in high modes is amplified by k^2 in h''; cut it off first
        coef[np.abs(coef) < 1e-15 * np.max(np.abs(coef))] = 0.0
        modes = np.arange(coef.size)
        coef_d1 = 1j * modes * coef
        coef_d1[-1] = 0.0  # Nyquist mode of an odd derivative is not representable
        self.dh = np.fft.irfft(coef_d1, n_theta)
        self.rho = h + np.fft.irfft(-(modes ** 2) * coef, n_theta)
        if np.min(self.rho) <= 0.0:
            j = int(np.argmin(self.rho))
            raise NotStrictlyConvexError(
                f"not strictly convex: h + h'' = {self.rho[j]:.3e} at theta = {theta[j]:.4f}"
            )
        self.kappa = 1.0 / self.rho

        dtheta = 2.0 * np.pi / n_theta
        self.perimeter = float(np.sum(h) * dtheta)
        self.area = float(0.5 * np.sum(h * self.rho) * dtheta)

        # real Fourier series of rho; Nyquist term vanishes on the nodes and is dropped
        rho_hat = np.fft.rfft(self.rho) / n_theta
        self._c0 = rho_hat[0].real
        a = 2.0 * rho_hat[1:-1].real
        b = -2.0 * rho_hat[1:-1].imag
        keep = np.nonzero(np.maximum(np.abs(a), np.abs(b)) > 1e-15 * abs(self._c0))[0]
        m = keep[-1] + 1 if keep.size else 0
        self._a = a[:m]
        self._b = b[:m]
        self._k = np.arange(1, m + 1, dtype=float)
        # cumulative arc length on theta_0..theta_{n-1} plus the closing point 2 pi
        self.s_table = self.arclength(np.append(theta, 2.0 * np.pi))

    def __repr__(self):
        return f"ConvexCurve({self.name}, L={self.perimeter:.12g}, A={self.area:.12g})"

    def rho_at(self, theta):
        """Radius of curvature at arbitrary angles (trigonometric interpolation)."""
        th = np.asarray(theta, dtype=float)
        kt = np.multiply.outer(th, self._k)
        return self._c0 + np.cos(kt) @ self._a + np.sin(kt) @ self._b

    def arclength(self, theta):
        """s(theta) = int_0^theta rho, exact for the interpolating series."""
        th = np.asarray(theta, dtype=float)
        kt = np.multiply.outer(th, self._k)
        return self._c0 * th + np.sin(kt) @ (self._a / self._k) - (np.cos(kt) - 1.0) @ (self._b / self._k)

    def theta_of_s(self, s):
        """Normal angle at arc length s; safeguarded Newton on the monotone map."""
        s = np.atleast_1d(np.asarray(s, dtype=float))
        L = self.perimeter
        turns = np.floor(s / L)
        s0 = s - turns * L
        lo = np.zeros_like(s0)
        hi = np.full_like(s0, 2.0 * np.pi)
        th = 2.0 * np.pi * s0 / L
        for _ in range(200):
            f = self.arclength(th) - s0
            if np.max(np.abs(f)) <= 1e-14 * L:
                break
            lo = np.where(f < 0, th, lo)
            hi = np.where(f > 0, th, hi)
            step = th - f / self.rho_at(th)
            th = np.where((step > lo) & (step < hi), step, 0.5 * (lo + hi))
        else:  # pragma: no cover
            raise DomainError("arc-length inversion failed to converge")
        return th + 2.0 * np.pi * turns

    def curvature_at_s(self, s):
        return 1.0 / self.rho_at(self.theta_of_s(s))

    def total_curvature(self):
        """int kappa_g ds, using the arc-length table for ds (2 pi for a closed convex curve)."""
        # derivative of the periodic part of s(theta) from its samples
        n = self.n_theta
        periodic = self.s_table[:-1] - self.perimeter * self.theta / (2.0 * np.pi)
        coef = np.fft.rfft(periodic)
        coef = 1j * np.arange(coef.size) * coef
        coef[-1] = 0.0
        ds_dtheta = self.perimeter / (2.0 * np.pi) + np.fft.irfft(coef, n)
        return float(np.sum(self.kappa * ds_dtheta) * 2.0 * np.pi / n)

    def boundary_points(self):
        """(x, y) of the boundary at the sample angles."""
        c = np.cos(self.theta)
        s = np.sin(self.theta)
        return self.h * c - self.dh * s, self.h * s + self.dh * c


def curve_from_support(h, n_theta=DEFAULT_N_THETA, name="curve"):
    """Build a ConvexCurve; raises NotStrictlyConvexError if h + h'' <= 0 anywhere."""
    return ConvexCurve(h, n_theta, name)


def disk(R, n_theta=DEFAULT_N_THETA):
    if not R > 0:
        raise DomainError("disk radius must be positive")
    return ConvexCurve(lambda th: np.full_like(th, float(R)), n_theta, name=f"disk(R={R:g})")


def ellipse(a, b, n_theta=DEFAULT_N_THETA):
    if not (a > 0 and b > 0):
        raise DomainError("ellipse semi-axes must be positive")
    return ConvexCurve(
        lambda th: np.sqrt((a * np.cos(th)) ** 2 + (b * np.sin(th)) ** 2),
        n_theta,
        name=f"ellipse(a={a:g},b={b:g})",
    )


def ellipse_with_perimeter(aspect, perimeter=2.0 * math.pi, n_theta=DEFAULT_N_THETA):
    """Ellipse with semi-axis ratio a/b = aspect and the given perimeter."""
    if not aspect >= 1.0:
        raise DomainError("aspect ratio a/b must be >= 1")
    scale = perimeter / ellipse(aspect, 1.0, n_theta).perimeter
    return ellipse(aspect * scale, scale, n_theta)


def support_poly(coeffs, n_theta=DEFAULT_N_THETA):
    """h(theta) = c0 + sum_{n>=1} c_n cos(n theta)."""
    coeffs = [float(c) for c in coeffs]
    if not coeffs:
        raise DomainError("support-poly needs at least one coefficient")

    def h(th):
        out = np.full_like(th, coeffs[0])
        for n, c in enumerate(coeffs[1:], start=1):
            out += c * np.cos(n * th)
        return out

    return ConvexCurve(h, n_theta, name="support-poly(" + ",".join(f"{c:g}" for c in coeffs) + ")")


def isoperimetric_check(curve):
    """Isoperimetric defect L^2 - 4 pi A (zero only for the disk)."""
    return curve.perimeter ** 2 - 4.0 * math.pi * curve.area


@dataclass(frozen=True)
class Surface3D:
    """Convex body in R^3 described by the data entering the reduced 3D quotient.

    ``total_mean_curv`` is int |H| dSigma with H the mean of the principal
    curvatures, so that it equals 2 pi times the mean width.
    """

    kind: str
    params: tuple
    area: float
    total_mean_curv: float
    mean_width: float
    volume: float

    def __post_init__(self):
        if self.minkowski_defect() < -1e-12 * self.total_mean_curv ** 2:
            raise DomainError("Minkowski inequality M^2 >= 4 pi |Sigma| violated")

    def minkowski_defect(self):
        return self.total_mean_curv ** 2 - 4.0 * math.pi * self.area


def surface_spherocylinder(r, L_axis):
    """Convex hull of two balls of radius r whose centres are L_axis apart."""
    if not (r > 0 and L_axis >= 0):
        raise DomainError("spherocylinder needs r > 0 and L_axis >= 0")
    area = 4.0 * math.pi * r * r + 2.0 * math.pi * r * L_axis
    # |H| = 1/r on the caps, 1/(2r) on the cylinder
    total_mean_curv = 4.0 * math.pi * r + math.pi * L_axis
    volume = 4.0 / 3.0 * math.pi * r ** 3 + math.pi * r * r * L_axis
    kind = "sphere" if L_axis == 0 else "spherocylinder"
    return Surface3D(kind, (r, L_axis), area, total_mean_curv, total_mean_curv / (2.0 * math.pi), volume)


def surface_sphere(R):
    return surface_spherocylinder(R, 0.0)
