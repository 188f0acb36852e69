"""Weighted half-line Sturm-Liouville problem behind the reduced Rayleigh quotient.

Minimizes

    [ int_0^T psi'^2 w dt + alpha w(0) psi(0)^2 ] / int_0^T psi^2 w dt

over continuous piecewise-linear psi, with w(t) = a + b t + c t^2 and a free
end at t = T. For w = 2 pi (R + t) this is the radial disk-exterior problem;
for w = 4 pi (R + t)^2 it is the ball exterior in R^3.

The generalized problem K x = lam M x is tridiagonal. The lowest eigenvalue
is isolated by bisection on the Sturm count (negative pivots of K - sigma M),
and the vector by inverse iteration.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_banded

from .errors import DomainError, SolverError

DECAY_LENGTHS = 15.0
MIN_ELEMENTS = 16
# truncation lengths beyond this many natural length scales are treated as "no bound state"
MAX_T_FACTOR = 1e6

_G2 = (np.array([-1.0, 1.0]) / math.sqrt(3.0), np.array([1.0, 1.0]))
_G3 = (np.array([-math.sqrt(0.6), 0.0, math.sqrt(0.6)]), np.array([5.0, 8.0, 5.0]) / 9.0)


@dataclass(frozen=True)
class WeightPoly:
    """w(t) = a + b t + c t^2 with a > 0 and b, c >= 0."""

    a: float
    b: float = 0.0
    c: float = 0.0

    def __post_init__(self):
        vals = (self.a, self.b, self.c)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError("weight coefficients must be finite")
        if self.a <= 0 or self.b < 0 or self.c < 0:
            raise DomainError(f"degenerate weight (a={self.a}, b={self.b}, c={self.c}); need a > 0, b >= 0, c >= 0")

    def __call__(self, t):
        return self.a + (self.b + self.c * t) * t

    @classmethod
    def disk(cls, R):
        return cls(2.0 * math.pi * R, 2.0 * math.pi, 0.0)

    @classmethod
    def ball(cls, R):
        return cls(4.0 * math.pi * R * R, 8.0 * math.pi * R, 4.0 * math.pi)


@dataclass
class EigenResult:
    lam: float
    vector: np.ndarray = field(repr=False)
    nodes: np.ndarray = field(repr=False)
    T: float
    n: int
    residual: float


def graded_mesh(T, n, inner):
    """Nodes t_i = inner (exp(c i/n) - 1), c = log(1 + T/inner).

    Elements grow geometrically from the boundary with ratio exp(c/n). The
    map is fixed for given (T, inner), so meshes with n and 2n elements are
    nested and the discretization error expands in powers of 1/n^2.
    """
    xi = np.arange(n + 1) / n
    if inner >= T:
        return T * xi
    c = math.log1p(T / inner)
    t = inner * np.expm1(c * xi)
    t[-1] = T
    return t


def assemble(alpha, w, nodes):
    """Tridiagonal stiffness and mass: (diag, offdiag) pairs."""
    t0 = nodes[:-1]
    h = np.diff(nodes)
    mid = 0.5 * (t0 + nodes[1:])

    # int_e w dt, exact with 2-point Gauss (w quadratic)
    wint = np.zeros_like(h)
    for x, g in zip(*_G2):
        wint += g * w(mid + 0.5 * h * x)
    wint *= 0.5 * h
    k_el = wint / (h * h)

    # int_e phi_i phi_j w dt, degree 4, exact with 3-point Gauss
    m00 = np.zeros_like(h)
    m01 = np.zeros_like(h)
    m11 = np.zeros_like(h)
    for x, g in zip(*_G3):
        wv = g * w(mid + 0.5 * h * x)
        p0 = 0.5 * (1.0 - x)
        p1 = 0.5 * (1.0 + x)
        m00 += wv * p0 * p0
        m01 += wv * p0 * p1
        m11 += wv * p1 * p1
    m00 *= 0.5 * h
    m01 *= 0.5 * h
    m11 *= 0.5 * h

    n = nodes.size
    kd = np.zeros(n)
    kd[:-1] += k_el
    kd[1:] += k_el
    ko = -k_el
    md = np.zeros(n)
    md[:-1] += m00
    md[1:] += m11
    mo = m01.copy()
    kd[0] += alpha * w(0.0)
    return (kd, ko), (md, mo)


def sturm_count(K, M, sigma):
    """Number of generalized eigenvalues below sigma (negative LDL^T pivots)."""
    d = (K[0] - sigma * M[0]).tolist()
    e = (K[1] - sigma * M[1]).tolist()
    count = 0
    p = d[0]
    tiny = 1e-300
    if p < 0:
        count += 1
    for i in range(1, len(d)):
        if p == 0.0:
            p = tiny
        p = d[i] - e[i - 1] * e[i - 1] / p
        if p < 0:
            count += 1
    return count


def _lowest_by_bisection(K, M, lo, hi, rtol=1e-15):
    while sturm_count(K, M, lo) > 0:
        lo = 2.0 * lo - 1.0
    if sturm_count(K, M, hi) == 0:
        raise SolverError("no eigenvalue below the upper search limit")
    while hi - lo > rtol * max(abs(lo), abs(hi)) + 1e-300:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if sturm_count(K, M, mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _banded(K, M, sigma):
    d = K[0] - sigma * M[0]
    e = K[1] - sigma * M[1]
    ab = np.zeros((3, d.size))
    ab[0, 1:] = e
    ab[1] = d
    ab[2, :-1] = e
    return ab


def _matvec(A, x):
    y = A[0] * x
    y[:-1] += A[1] * x[1:]
    y[1:] += A[1] * x[:-1]
    return y


def _inverse_iteration(K, M, lam, steps=3):
    n = K[0].size
    shift = lam - 1e-9 * max(abs(lam), 1e-300)
    ab = _banded(K, M, shift)
    x = np.ones(n)
    for _ in range(steps):
        try:
            x = solve_banded((1, 1), ab, _matvec(M, x))
        except np.linalg.LinAlgError as exc:
            raise SolverError(f"inverse iteration failed near lambda={lam:.6g}: {exc}") from None
        x /= math.sqrt(x @ _matvec(M, x))
    if x[0] < 0:
        x = -x
    Mx = _matvec(M, x)
    r = _matvec(K, x) - lam * Mx
    return x, float(np.linalg.norm(r) / np.linalg.norm(Mx))


def _decay_estimate(alpha, w):
    # midpoint of the disk bracket with effective radius a/b (2D disk: R = w(0)/(2 pi))
    lower = math.sqrt(max(0.0, alpha * alpha + alpha * w.b / w.a))
    return 0.5 * (lower + abs(alpha))


def _inner_scale(alpha, w, T):
    scales = [1.0 / abs(alpha), T]
    if w.b > 0:
        scales.append(w.a / w.b)
    if w.c > 0:
        scales.append(math.sqrt(w.a / w.c))
    return min(scales)


def solve_halfline(alpha, w, T, n, inner=None):
    """Lowest eigenpair of the reduced problem on [0, T] with n elements."""
    if not alpha < 0:
        raise DomainError("reduced problem needs alpha < 0")
    if not (T > 0 and math.isfinite(T)):
        raise DomainError(f"truncation length must be positive, got T={T}")
    if n < MIN_ELEMENTS:
        raise DomainError(f"need at least {MIN_ELEMENTS} elements, got n={n}")
    if inner is None:
        inner = _inner_scale(alpha, w, T)
    nodes = graded_mesh(T, n, inner)
    K, M = assemble(alpha, w, nodes)
    lam = _lowest_by_bisection(K, M, -2.0 * alpha * alpha - 1.0, 0.0)
    vec, residual = _inverse_iteration(K, M, lam)
    return EigenResult(lam=lam, vector=vec, nodes=nodes, T=T, n=n, residual=residual)


def truncation_length(alpha, w, n_probe=128, max_rounds=40):
    """T = 15 decay lengths, checked against a coarse pre-solve.

    The first guess uses the disk bracket midpoint; if the coarse eigenvalue
    decays more slowly than guessed, T is enlarged until sqrt(|lam|) T >= 15.
    """
    k = _decay_estimate(alpha, w)
    T = DECAY_LENGTHS / k
    T_cap = MAX_T_FACTOR * (_inner_scale(alpha, w, math.inf) + 1.0 / abs(alpha))
    for _ in range(max_rounds):
        lam = solve_halfline(alpha, w, T, n_probe).lam
        if lam >= 0:
            raise DomainError("reduced quotient has no negative eigenvalue for this coupling")
        if math.sqrt(-lam) * T >= DECAY_LENGTHS:
            return T
        T = 1.2 * DECAY_LENGTHS / math.sqrt(-lam)
        if T > T_cap:
            break
    raise DomainError(
        "no discrete eigenvalue of the reduced problem within reach: the eigenfunction does not "
        f"localize before T = {T_cap:.3g} (no bound state, or one too weakly bound to resolve)"
    )


def solve_extrapolated(alpha, w, T=None, n=4096, levels=3):
    """Richardson (Romberg) extrapolation over n, n/2, ..., n/2^(levels-1).

    Returns (lam, table) where table[j] lists the raw eigenvalues.
    """
    if T is None:
        T = truncation_length(alpha, w)
    inner = _inner_scale(alpha, w, T)
    ns = [n // 2 ** j for j in reversed(range(levels))]
    raw = [solve_halfline(alpha, w, T, m, inner=inner).lam for m in ns]
    table = [raw]
    row = raw
    factor = 4.0
    while len(row) > 1:
        row = [(factor * row[i + 1] - row[i]) / (factor - 1.0) for i in range(len(row) - 1)]
        table.append(row)
        factor *= 4.0
    return row[0], table


def reduced_bound_2d(alpha, perimeter):
    """Reduced quotient with w = perimeter + 2 pi t (equals the equal-perimeter disk value)."""
    if not perimeter > 0:
        raise DomainError("perimeter must be positive")
    return solve_extrapolated(alpha, WeightPoly(perimeter, 2.0 * math.pi, 0.0))[0]


def reduced_bound_3d(alpha, surf):
    """Reduced quotient with w = |Sigma| + 2 M t + 4 pi t^2; an upper bound for the 3D exterior."""
    w = WeightPoly(surf.area, 2.0 * surf.total_mean_curv, 4.0 * math.pi)
    return solve_extrapolated(alpha, w)[0]
