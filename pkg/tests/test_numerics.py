import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spinmem.errors import BoundsError, NoBracket, QuadratureFailure
from spinmem.numerics import (
    find_root_bracketed,
    golden_section_max,
    integrate_infinite,
    mean_abs2_kernel,
    mean_abs2_profile,
    phi1,
    phi2,
)


def test_lorentzian_integral():
    r = integrate_infinite(lambda w: 1.0 / (1.0 + w * w))
    assert r.value == pytest.approx(0.5, rel=1e-10)
    assert r.error_estimate >= 0
    assert r.evaluations > 0


@given(st.floats(1e-3, 1e3))
@settings(max_examples=25, deadline=None)
def test_lorentzian_any_width(g):
    r = integrate_infinite(lambda w: g * g / (g * g + w * w), scale=1.0, hints=[g], even=True)
    assert r.value == pytest.approx(g / 2, rel=1e-8)


def test_gaussian_windowed():
    # int exp(-w^2/2) cos(w) dw / 2pi = exp(-1/2)/sqrt(2 pi)
    r = integrate_infinite(lambda w: math.exp(-w * w / 2) * math.cos(w))
    assert r.value == pytest.approx(math.exp(-0.5) / math.sqrt(2 * math.pi), rel=1e-8)


def test_zero_integrand():
    assert integrate_infinite(lambda w: 0.0).value == 0.0


def test_nonintegrable_raises():
    with pytest.raises(QuadratureFailure):
        integrate_infinite(lambda w: 1.0 / math.sqrt(abs(w) + 1e-300))


def test_root_bisection():
    assert find_root_bracketed(lambda x: x - 1, 0.0, 2.0) == pytest.approx(1.0, rel=1e-9)


def test_root_needs_bracket():
    with pytest.raises(NoBracket):
        find_root_bracketed(lambda x: x * x + 1, -1.0, 1.0)


@given(st.floats(-50, 50), st.floats(0.1, 10))
def test_root_property(r, width):
    x = find_root_bracketed(lambda x: math.tanh(x - r), r - width, r + 2 * width, tol=1e-12)
    assert x == pytest.approx(r, abs=1e-9 * max(1, abs(r)) * 3 * width)


def test_golden_section():
    x, fx = golden_section_max(lambda x: -(x - 1.3) ** 2, 0.0, 4.0, tol=1e-8)
    assert x == pytest.approx(1.3, abs=1e-6)
    assert fx == pytest.approx(0.0, abs=1e-10)


def test_golden_section_degenerate_and_bad_bounds():
    assert golden_section_max(lambda x: x, 2.0, 2.0)[0] == 2.0
    with pytest.raises(BoundsError):
        golden_section_max(lambda x: x, 3.0, 2.0)


def test_golden_section_monotone_picks_endpoint():
    x, _ = golden_section_max(lambda x: x, 0.0, 1.0, tol=1e-3)
    assert x == 1.0


@given(st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False)
       .filter(lambda z: z.real > -5))
def test_phi_functions_match_definitions(z):
    if abs(z) < 1e-2:
        return
    assert phi1(z) == pytest.approx((1 - np.exp(-z)) / z, rel=1e-9, abs=1e-12)
    assert phi2(z) == pytest.approx((z - 1 + np.exp(-z)) / z ** 2, rel=1e-8, abs=1e-12)


def test_phi_small_argument():
    assert phi1(0) == pytest.approx(1.0)
    assert phi2(0) == pytest.approx(0.5)
    assert abs(phi1(1e-8)) ** 2 == pytest.approx(1.0, abs=1e-7)


@pytest.mark.parametrize("a", [0.0, 1e-5, 0.3 + 0.7j, 5 - 20j, 200 + 3j])
def test_profile_mean_matches_quadrature(a):
    u = np.linspace(0, 1, 20001)
    h = u if a == 0 else (1 - np.exp(-a * u)) / a
    ref = np.trapezoid(np.abs(h) ** 2, u)
    assert mean_abs2_profile(a) == pytest.approx(ref, rel=1e-6, abs=1e-12)
    mu = 0.4 - 1.1j
    ref2 = np.trapezoid(np.abs(1 - mu * h) ** 2, u)
    assert mean_abs2_kernel(mu, a) == pytest.approx(ref2, rel=1e-6)
