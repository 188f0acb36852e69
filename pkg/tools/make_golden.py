"""Arbitrary-precision oracle for the golden constants in tests/golden.py.

Run once before trusting the library; the output is pasted into
tests/golden.py. Nothing under src/ imports this file.

    python tools/make_golden.py > tests/golden.py

Bessel values come from hand-written mpmath series (ascending for small and
moderate x, asymptotic for large x) and are cross-checked against
mpmath.besselk / mpmath.besseli. Eigenvalues come from bracketed bisection
on the oracle Bessel functions, or from radial shooting.
"""

import math

import mpmath as mp
import numpy as np
from scipy.integrate import solve_ivp

DIGITS = 60
mp.mp.dps = DIGITS


def _ascending(nu, x):
    """I_nu and K_nu (nu in {0, 1}) from the ascending series at 60+ digits."""
    guard = int(2 * float(x) / math.log(10)) + 20
    with mp.workdps(DIGITS + guard):
        x = mp.mpf(x)
        q = x * x / 4
        euler = mp.euler
        i_sum = mp.mpf(0)
        k_sum = mp.mpf(0)
        term = (x / 2) ** nu  # (x/2)^nu (x^2/4)^k / (k! (k+nu)!)
        harm_k = mp.mpf(0)  # H_k
        harm_kn = mp.mpf(0) if nu == 0 else mp.mpf(1)  # H_{k+nu}
        k = 0
        eps = mp.mpf(10) ** (-(DIGITS + guard))
        while True:
            i_sum += term
            if nu == 0:
                k_sum += harm_k * term
            else:
                k_sum += (harm_k + harm_kn - 2 * euler) * term
            k += 1
            term = term * q / (k * (k + nu))
            harm_k += mp.mpf(1) / k
            harm_kn += mp.mpf(1) / (k + nu)
            if abs(term) < eps * abs(i_sum) and k > 5:
                break
        if nu == 0:
            kval = -(mp.log(x / 2) + euler) * i_sum + k_sum
        else:
            kval = 1 / x + mp.log(x / 2) * i_sum - k_sum / 2
        return +i_sum, +kval


def _asymptotic(nu, x):
    """Scaled e^{-x} I_nu and e^{x} K_nu from the large-x asymptotic series."""
    x = mp.mpf(x)
    mu = 4 * nu * nu
    term = mp.mpf(1)
    s_i = mp.mpf(1)
    s_k = mp.mpf(1)
    k = 0
    eps = mp.mpf(10) ** (-DIGITS - 5)
    while True:
        k += 1
        new = term * (mu - (2 * k - 1) ** 2) / (8 * k * x)
        if abs(new) > abs(term):
            raise ArithmeticError("asymptotic series diverged before convergence")
        term = new
        s_k += term
        s_i += (-1) ** k * term
        if abs(term) < eps:
            break
    i_scaled = s_i / mp.sqrt(2 * mp.pi * x)
    k_scaled = s_k * mp.sqrt(mp.pi / (2 * x))
    return i_scaled, k_scaled


def bessel(nu, x, kind):
    """Return (value, scaled value) for kind 'i' or 'k'."""
    x = mp.mpf(x)
    if x <= 100:
        ival, kval = _ascending(nu, x)
        if kind == "i":
            return ival, ival * mp.exp(-x)
        return kval, kval * mp.exp(x)
    isc, ksc = _asymptotic(nu, x)
    if kind == "i":
        return isc * mp.exp(x), isc
    return ksc * mp.exp(-x), ksc


def _crosscheck(nu, x, kind, value):
    ref = mp.besselk(nu, x) if kind == "k" else mp.besseli(nu, x)
    rel = abs(value / ref - 1)
    assert rel < mp.mpf(10) ** -50, (nu, x, kind, rel)


def disk_root(alpha, R):
    """k solving k K1(kR) + alpha K0(kR) = 0 by plain bisection."""
    alpha = mp.mpf(alpha)
    R = mp.mpf(R)

    def f(k):
        return k * bessel(1, k * R, "k")[1] + alpha * bessel(0, k * R, "k")[1]

    lo = mp.sqrt(max(mp.mpf(0), alpha ** 2 + alpha / R))
    if lo == 0:
        lo = abs(alpha) / 2
        while f(lo) > 0:
            lo /= 2
    hi = abs(alpha)
    assert f(lo) < 0 < f(hi)
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def shoot_reduced(alpha, a, b, c, k_lo, k_hi, t_end):
    """Eigen decay rate of -(w psi')'/w = -k^2 psi, psi'(0) = alpha psi(0).

    Integrates outward with psi(0)=1; the sign of psi(t_end) flips as k
    crosses the eigenvalue because the growing mode changes sign.
    """

    def end_value(k):
        def rhs(t, y):
            w = a + b * t + c * t * t
            dw = b + 2 * c * t
            return [y[1], k * k * y[0] - dw / w * y[1]]

        sol = solve_ivp(rhs, (0.0, t_end), [1.0, alpha], method="DOP853",
                        rtol=1e-13, atol=1e-300)
        # e^{-k t} removes the growing scale; only the sign matters
        return sol.y[0, -1]

    f_lo = np.sign(end_value(k_lo))
    assert f_lo != np.sign(end_value(k_hi))
    for _ in range(60):
        mid = 0.5 * (k_lo + k_hi)
        if np.sign(end_value(mid)) == f_lo:
            k_lo = mid
        else:
            k_hi = mid
    return 0.5 * (k_lo + k_hi)


def main():
    xs = ["1e-6", "0.001", "0.1", "0.5", "1", "1.5", "2", "2.5", "3", "5",
          "10", "20", "50", "100", "300", "1000", "1e5"]
    rows = []
    for xs_ in xs:
        x = mp.mpf(xs_)
        vals = {}
        for name, nu, kind in (("k0", 0, "k"), ("k1", 1, "k"), ("i0", 0, "i"), ("i1", 1, "i")):
            val, scaled = bessel(nu, x, kind)
            if x <= 1000:
                _crosscheck(nu, x, kind, val)
            vals[name] = mp.nstr(val, 30) if x <= 700 else None
            vals[name + "e"] = mp.nstr(scaled, 30)
        rows.append((xs_, vals))

    print('"""Golden constants frozen from tools/make_golden.py (60-digit oracle). Do not edit by hand."""')
    print()
    print("# x -> {name: value string}; unscaled entries are None where they overflow a double")
    print("BESSEL = {")
    for xs_, vals in rows:
        inner = ", ".join(f'"{k}": ' + (f'"{v}"' if v is not None else "None") for k, v in vals.items())
        print(f'    "{xs_}": {{{inner}}},')
    print("}")
    print()

    print("# (alpha, R) -> decay rate k of the disk-exterior ground state; lambda = -k^2")
    print("DISK_K = {")
    for alpha, R in ((-1, 1), (-2, "0.5"), ("-0.25", 4), (-4, "0.25"), (-16, 4), ("-0.25", "0.25"), (-10, 1), ("-0.02", 1), ("-0.05", 2)):
        k = disk_root(alpha, R)
        print(f'    ({float(mp.mpf(alpha))!r}, {float(mp.mpf(R))!r}): "{mp.nstr(k, 30)}",')
    print("}")
    print()

    # 3D ball exterior, alpha=-2, R=1: weight 4 pi (1+t)^2, expected k = 1
    k_ball = shoot_reduced(-2.0, 4 * math.pi, 8 * math.pi, 4 * math.pi, 0.5, 1.5, 30.0)
    print("# shooting oracle, ball R=1 exterior, alpha=-2 (3D radial problem)")
    print(f"BALL_K_SHOOT = {k_ball!r}")
    # spherocylinder r=1, axis 4: area 12 pi, total mean curvature 8 pi
    area = 12 * math.pi
    mean_curv = 8 * math.pi
    k_sc = shoot_reduced(-2.0, area, 2 * mean_curv, 4 * math.pi, 0.5, 2.0, 30.0)
    print("# shooting oracle, reduced 3D quotient for spherocylinder r=1, L_axis=4, alpha=-2")
    print(f"SPHEROCYLINDER_K_SHOOT = {k_sc!r}")


if __name__ == "__main__":
    main()
