"""Lowest Robin eigenvalue in the exterior of a disk (2D) and a ball (3D).

The 2D ground state is K0(k r) with lambda = -k^2, where k solves

    k K1(k R) + alpha K0(k R) = 0.

The bounds -alpha^2 < lambda < -alpha^2 - alpha/R give a bracket for k that
is valid for every alpha < 0, so the root finder never needs a search.
"""

import math
from dataclasses import dataclass

from . import specfun
from .errors import DomainError, SolverError

DEFAULT_TOL = 1e-12
MAX_ITER = 100
# below this the root k cannot be squared into a normal double
UNDERFLOW_LOG_K = -340.0


@dataclass(frozen=True)
class DiskSolution:
    R: float
    alpha: float
    k: float
    lam: float
    residual: float


def _require_bound_state(alpha, R):
    if not (math.isfinite(alpha) and math.isfinite(R)):
        raise DomainError("alpha and R must be finite")
    if R <= 0:
        raise DomainError(f"radius must be positive, got R={R}")
    if alpha >= 0:
        raise DomainError("no discrete eigenvalue for alpha >= 0")


def bounds_2d(alpha, R):
    """Return (lower, upper) = (-alpha^2, -alpha^2 - alpha/R)."""
    _require_bound_state(alpha, R)
    return -alpha * alpha, -alpha * alpha - alpha / R


def _residual(k, alpha, R):
    """Scaled residual e^{kR} (k K1(kR) + alpha K0(kR))."""
    k0, k1 = specfun.k_pair_scaled(k * R)
    return k * k1 + alpha * k0


def _weak_coupling_lower(alpha, R, hi):
    # root sits near (2/R) exp(-gamma - 1/(|alpha| R)); step down until f < 0
    log_k = math.log(2.0 / R) - specfun.EULER_GAMMA - 1.0 / (abs(alpha) * R)
    if log_k < UNDERFLOW_LOG_K:
        raise SolverError(
            f"eigenvalue underflows double precision for alpha={alpha}, R={R} "
            f"(log k ~ {log_k:.4g}, so |lambda| ~ exp({2 * log_k:.4g}))"
        )
    k = min(0.5 * hi, math.exp(log_k))
    while _residual(k, alpha, R) >= 0.0:
        k *= 0.5
        if k < 1e-300:
            raise SolverError(f"could not bracket the disk root for alpha={alpha}, R={R}")
    return k


def solve_disk_exterior_2d(alpha, R, tol=DEFAULT_TOL):
    """Lowest eigenvalue of the Robin Laplacian outside the disk of radius R.

    The provable bracket is narrowed by bisection in log k while it spans
    more than a factor 2, then safeguarded Newton (K0' = -K1,
    K1' = -K0 - K1/x) finishes, falling back to bisection on bad steps.
    """
    _require_bound_state(alpha, R)
    if tol <= 0:
        raise DomainError("tol must be positive")
    lo = math.sqrt(max(0.0, alpha * alpha + alpha / R))
    hi = -alpha
    f_hi = _residual(hi, alpha, R)
    if lo == 0.0:
        lo = _weak_coupling_lower(alpha, R, hi)
    f_lo = _residual(lo, alpha, R)
    if not (f_lo < 0.0 < f_hi):
        raise SolverError(
            f"bracket [{lo}, {hi}] does not change sign (f={f_lo}, {f_hi}); "
            "the Bessel kernel violates a proven bound"
        )

    # bisect in log k while the bracket spans decades (weak coupling puts k near e^{-1/|alpha| R})
    it = 0
    while hi > 2.0 * lo and it < MAX_ITER:
        mid = math.sqrt(lo * hi)
        if _residual(mid, alpha, R) < 0.0:
            lo = mid
        else:
            hi = mid
        it += 1

    # strong-coupling start k ~ |alpha| - 1/(2R), clipped into the bracket
    k = -alpha - 0.5 / R
    if not (lo < k < hi):
        k = 0.5 * (lo + hi)
    while True:
        k0, k1 = specfun.k_pair_scaled(k * R)
        res = k * k1 + alpha * k0
        it += 1
        if res == 0.0 or it >= MAX_ITER:
            break
        if res < 0.0:
            lo = k
        else:
            hi = k
        # d/dk [k K1(kR) + alpha K0(kR)] = -R (k K0 + alpha K1), same scaling
        slope = -R * (k * k0 + alpha * k1)
        k_new = k - res / slope
        if not (lo < k_new < hi):
            k_new = 0.5 * (lo + hi)
        if abs(k_new - k) <= 1e-15 * k:
            break  # keep the evaluated k so the reported residual is exact
        k = k_new
    if abs(res) > tol * max(1.0, abs(alpha)):
        raise SolverError(f"disk root did not converge: residual {res:.3e} for alpha={alpha}, R={R}")
    return DiskSolution(R=R, alpha=alpha, k=k, lam=-k * k, residual=abs(res))


def disk_lambda(alpha, R):
    """Shorthand for solve_disk_exterior_2d(alpha, R).lam."""
    return solve_disk_exterior_2d(alpha, R).lam


def _norm_integral_scaled(k, R):
    """e^{2kR} * int_R^inf K0(kr)^2 r dr, via (R^2/2)(K1^2 - K0^2) at kR."""
    k0, k1 = specfun.k_pair_scaled(k * R)
    return 0.5 * R * R * (k1 - k0) * (k1 + k0), k0


def dlambda_dR(alpha, R):
    """Radius derivative -(2/R) lam (lam + alpha^2 + alpha/R) / (lam + alpha^2)."""
    lam = solve_disk_exterior_2d(alpha, R).lam
    a2 = alpha * alpha
    return -(2.0 / R) * lam * (lam + a2 + alpha / R) / (lam + a2)


def dlambda_dalpha_disk(alpha, R):
    """Coupling derivative: boundary L2 norm of the normalized ground state."""
    sol = solve_disk_exterior_2d(alpha, R)
    norm, k0 = _norm_integral_scaled(sol.k, R)
    return R * k0 * k0 / norm


def eigenfunction_disk(sol, r):
    """Normalized ground state at radius r >= R (2 pi int psi^2 r dr = 1)."""
    R = sol.R
    if r < R:
        raise DomainError(f"r={r} lies inside the disk of radius {R}")
    norm, _ = _norm_integral_scaled(sol.k, R)
    k0r = specfun.k_pair_scaled(sol.k * r)[0]
    # e^{-k r} from K0(k r) and e^{k R} from the scaled norm combine into one factor
    return k0r * math.exp(-sol.k * (r - R)) / math.sqrt(2.0 * math.pi * norm)


def eigenfunction_disk_derivative(sol, r):
    """d/dr of eigenfunction_disk, i.e. -k K1(k r) times the normalization."""
    R = sol.R
    if r < R:
        raise DomainError(f"r={r} lies inside the disk of radius {R}")
    norm, _ = _norm_integral_scaled(sol.k, R)
    k1r = specfun.k_pair_scaled(sol.k * r)[1]
    return -sol.k * k1r * math.exp(-sol.k * (r - R)) / math.sqrt(2.0 * math.pi * norm)


def solve_ball_exterior_3d(alpha, R):
    """Bottom of the spectrum outside the ball of radius R in R^3.

    The radial ground state e^{-k r}/r meets the Robin condition for
    k = -alpha - 1/R; for alpha >= -1/R there is no bound state and the
    bottom of the essential spectrum, 0, is returned.
    """
    if not R > 0:
        raise DomainError(f"radius must be positive, got R={R}")
    k = -alpha - 1.0 / R
    if k <= 0.0:
        return 0.0
    return -k * k


def quantitative_gap(alpha, perimeter, area):
    """Improved isochoric bound for a convex set with the given perimeter and area.

    Returns (bound, gap) with gap = lam(B_R2) - lam(B_R1) >= 0 where R1 is the
    equal-perimeter radius and R2 the equal-area radius.
    """
    if perimeter <= 0 or area <= 0:
        raise DomainError("perimeter and area must be positive")
    # small slack absorbs rounding in perimeter/area computed by quadrature
    if perimeter * perimeter < 4.0 * math.pi * area * (1.0 - 1e-12):
        raise DomainError("perimeter and area violate the isoperimetric inequality")
    R1 = perimeter / (2.0 * math.pi)
    R2 = math.sqrt(area / math.pi)
    if R2 >= R1 * (1.0 - 1e-12):
        R2 = R1  # equality case up to the same rounding slack
    lam1 = disk_lambda(alpha, R1)
    lam2 = lam1 if R2 == R1 else disk_lambda(alpha, R2)
    gap = lam2 - lam1
    return lam2 - gap, gap
