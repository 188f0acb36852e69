import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import BESSEL
from robin_lab import specfun
from robin_lab.errors import DomainError

FUNCS = {
    "k0": specfun.bessel_k0, "k1": specfun.bessel_k1, "i0": specfun.bessel_i0, "i1": specfun.bessel_i1,
    "k0e": specfun.bessel_k0e, "k1e": specfun.bessel_k1e, "i0e": specfun.bessel_i0e, "i1e": specfun.bessel_i1e,
}

positive = st.floats(min_value=1e-6, max_value=1e6, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("xs", sorted(BESSEL, key=float))
def test_golden_values(xs):
    x = float(xs)
    for name, ref in BESSEL[xs].items():
        if ref is None:
            continue
        got = FUNCS[name](x)
        assert abs(got / float(ref) - 1.0) < 1e-13, (name, x, got, ref)


def test_wronskian_at_two():
    w = specfun.bessel_i0(2.0) * specfun.bessel_k1(2.0) + specfun.bessel_i1(2.0) * specfun.bessel_k0(2.0)
    assert w == pytest.approx(0.5, rel=1e-15)


def test_wronskian_log_grid():
    x = np.logspace(-6, 6, 200)
    w = specfun.bessel_i0e(x) * specfun.bessel_k1e(x) + specfun.bessel_i1e(x) * specfun.bessel_k0e(x)
    assert np.max(np.abs(w * x - 1.0)) < 1e-12


def test_small_argument_limit():
    assert 1e-6 * specfun.bessel_k1(1e-6) == pytest.approx(1.0, abs=1e-10)


def test_matches_scipy_on_dense_grid():
    x = np.logspace(-5, 2.5, 500)
    for ours, ref in ((specfun.bessel_k0, sc.k0), (specfun.bessel_k1, sc.k1),
                      (specfun.bessel_i0, sc.i0), (specfun.bessel_i1, sc.i1)):
        assert np.max(np.abs(ours(x) / ref(x) - 1.0)) < 1e-13
    x = np.logspace(-5, 6, 500)
    for ours, ref in ((specfun.bessel_k0e, sc.k0e), (specfun.bessel_k1e, sc.k1e),
                      (specfun.bessel_i0e, sc.i0e), (specfun.bessel_i1e, sc.i1e)):
        assert np.max(np.abs(ours(x) / ref(x) - 1.0)) < 1e-13


@pytest.mark.parametrize("name", ["k0", "k1"])
def test_series_and_fraction_agree_at_seam(name):
    # both K branches at the split point and just beside it
    x = specfun.K_SERIES_MAX
    below = FUNCS[name](math.nextafter(x, 0.0))
    above = FUNCS[name](math.nextafter(x, 4.0))
    assert abs(above / below - 1.0) < 1e-13


def test_monotonicity():
    x = np.logspace(-5, 2.5, 400)
    assert np.all(np.diff(specfun.bessel_k0(x)) < 0)
    assert np.all(np.diff(specfun.bessel_k1(x)) < 0)
    assert np.all(np.diff(specfun.bessel_i0(x)) > 0)
    assert np.all(np.diff(specfun.bessel_i1(x)) > 0)


def test_ratio_sandwich_and_large_argument():
    x = np.logspace(-6, 6, 1000)
    r = specfun.k_ratio(x)
    assert np.all(r < 1.0)
    assert np.all(r > x / (0.5 + x + np.sqrt(0.25 + x * x)))
    # sharper form of the same lower bound
    assert np.all(r > x / (0.5 + np.sqrt(0.25 + x * x)))
    big = specfun.k_ratio(1e5)
    assert math.isfinite(big) and 0.9999 < big < 1.0


def test_scaled_finite_up_to_1e6():
    for f in (specfun.bessel_k0e, specfun.bessel_k1e, specfun.bessel_i0e, specfun.bessel_i1e):
        v = f(1e6)
        assert math.isfinite(v) and v > 0


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        specfun.bessel_k0(bad)
    with pytest.raises(DomainError):
        specfun.k_ratio(np.array([1.0, bad]))


def test_array_shape_preserved():
    x = np.array([[0.5, 1.0], [2.0, 3.0]])
    assert specfun.bessel_k1(x).shape == (2, 2)
    assert isinstance(specfun.bessel_k1(1.0), float)


def test_bessel_eval_record():
    e = specfun.evaluate("k1", 1.0, scaled=True)
    assert e.scaled and e.x == 1.0
    assert e.value == pytest.approx(float(BESSEL["1"]["k1e"]), rel=1e-14)
    with pytest.raises(DomainError):
        specfun.evaluate("k2", 1.0)


@settings(max_examples=200, deadline=None)
@given(positive)
def test_wronskian_property(x):
    w = specfun.bessel_i0e(x) * specfun.bessel_k1e(x) + specfun.bessel_i1e(x) * specfun.bessel_k0e(x)
    assert abs(w * x - 1.0) < 1e-12


@settings(max_examples=200, deadline=None)
@given(positive)
def test_ratio_property(x):
    r = specfun.k_ratio(x)
    assert x / (0.5 + x + math.sqrt(0.25 + x * x)) < r < 1.0
