import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spinmem.errors import GainRegimeWarning, NoWindowError
from spinmem.params import MediumParams
from spinmem.propagation import (
    absorption_width_raman,
    absorption_zero_freq,
    alpha_eit,
    alpha_eit_atomic,
    alpha_raman,
    alpha_raman_atomic,
    group_delay,
    group_velocity,
    transparency_width_eit,
)

W = np.concatenate([-np.logspace(-4, 4, 200), np.logspace(-4, 4, 200)])

eit_params = st.builds(
    lambda c, ge, g0: MediumParams.eit(c, ge, g0),
    st.floats(1, 1e3), st.floats(0.1, 100), st.floats(0, 0.1))
raman_params = st.builds(
    lambda c, gr, g0: MediumParams.raman(c, gr, g0),
    st.floats(1, 1e3), st.floats(1e-4, 0.1), st.floats(0, 0.1))


def test_eit_zero_frequency_transparency():
    assert alpha_eit(0.0, MediumParams.eit(100, 10, 0.0)) == 0


def test_eit_zero_frequency_absorption():
    p = MediumParams.eit(100, 10, 1e-3)
    assert alpha_eit(0.0, p).real == pytest.approx(100 * 0.001 / 10.001, rel=1e-12)
    q = MediumParams.eit(100, 10, 0.1)
    assert absorption_zero_freq(q) == pytest.approx(0.990099, rel=1e-5)
    assert absorption_zero_freq(MediumParams.eit(100, 10, 0.0)) == 0


@given(eit_params)
def test_absorption_is_re_alpha_at_zero(p):
    assert absorption_zero_freq(p) == pytest.approx(alpha_eit(0.0, p).real, rel=1e-12, abs=1e-15)


def test_raman_values():
    p = MediumParams.raman(100, 0.01, 0.0)
    assert alpha_raman(0.0, p) == pytest.approx(100.0)
    assert alpha_raman_atomic(0.01, p) == pytest.approx(50 + 50j)


def test_high_frequency_transparency():
    p = MediumParams.eit(100, 10, 1e-3)
    a = alpha_eit(1e6, p)
    assert a.real < 1e-8
    r = MediumParams.raman(100, 0.01, 1e-3)
    assert alpha_raman(1e6, r).real < 1e-8
    assert alpha_raman(1e6, r).imag == pytest.approx(-1e6 * r.transit, rel=1e-6)


@given(eit_params)
@settings(max_examples=30)
def test_eit_passive_and_hermitian(p):
    a = alpha_eit(W, p)
    assert np.all(a.real >= -1e-12)
    assert np.allclose(alpha_eit(-W, p), np.conj(a), rtol=1e-12, atol=1e-14)


@given(raman_params)
@settings(max_examples=30)
def test_raman_passive_and_hermitian(p):
    a = alpha_raman(W, p)
    assert np.all(a.real >= 0)
    assert np.allclose(alpha_raman(-W, p), np.conj(a), rtol=1e-12, atol=1e-14)


def test_vacuum_limit():
    p = MediumParams(gamma0=1e-3, omega_rabi=1.0, g2n=1e-12, transit=0.01)
    assert alpha_eit(3.0, p) == pytest.approx(-3j * 0.01, abs=1e-12)
    assert group_velocity(p) == pytest.approx(1.0)


def test_group_velocity_no_decay():
    p = MediumParams(gamma0=0.0, omega_rabi=2.0, g2n=1e4, transit=0.01)
    assert group_velocity(p) == pytest.approx(1 / (1 + 1e4 / 4))


@pytest.mark.parametrize("g0", [0.0, 1e-3, 0.05])
def test_group_delay_matches_slope(g0):
    p = MediumParams.eit(100, 10, g0)
    h = 1e-6
    slope = (alpha_eit_atomic(h, p).imag - alpha_eit_atomic(-h, p).imag) / (2 * h)
    assert group_delay(p) == pytest.approx(-slope, rel=1e-6)
    # the usual first-order form is off at relative order gamma0/gamma
    if g0 > 0:
        assert group_delay(p, approximate=True) == pytest.approx(-slope, rel=2 * g0)


def test_small_frequency_expansion():
    p = MediumParams.eit(100, 10, 1e-3)
    ws = np.logspace(-6, -3, 10)
    lin = absorption_zero_freq(p) - 1j * ws * (group_delay(p) + p.transit)
    resid = np.abs(alpha_eit(ws, p) - lin)
    k = np.max(resid / ws ** 2)
    assert np.all(resid <= k * ws ** 2 * (1 + 1e-9))
    assert k < 1e3


def test_gain_regime_warning():
    p = MediumParams(gamma0=0.5, omega_rabi=0.1, g2n=1e4, transit=0.01)
    with pytest.warns(GainRegimeWarning):
        group_velocity(p)


def test_eit_width_closed_form_and_root():
    w = transparency_width_eit(MediumParams.eit(100, 10, 0.0))
    assert w.closed_form == pytest.approx(10 * math.sqrt(math.log(2) / 200), rel=1e-12)
    assert w.numeric == pytest.approx(w.closed_form, rel=0.1)


def test_eit_width_scaling():
    w1 = transparency_width_eit(MediumParams.eit(100, 10, 0.0))
    w4 = transparency_width_eit(MediumParams.eit(400, 10, 0.0))
    assert w1.closed_form / w4.closed_form == pytest.approx(2.0, rel=1e-12)
    assert w1.numeric / w4.numeric == pytest.approx(2.0, rel=0.1)


def test_eit_width_zero_crossing():
    p = MediumParams.eit(100, 10, 0.1)
    # sqrt of a rounding-level argument, since Gamma_E = (sqrt 10)^2
    assert transparency_width_eit(p).closed_form == pytest.approx(0.0, abs=1e-7)


def test_eit_no_window():
    # C gamma0 > Gamma_E and absorption too weak to ever drop by ln2/2
    p = MediumParams.eit(0.2, 0.01, 0.5)
    with pytest.raises(NoWindowError):
        transparency_width_eit(p)


def test_raman_width():
    w = absorption_width_raman(MediumParams.raman(100, 0.01, 0.0))
    assert w.closed_form == pytest.approx(math.sqrt(2 / math.log(2)) * 0.1, rel=1e-12)
    assert w.closed_form == pytest.approx(0.1699, abs=1e-4)
    assert w.numeric == pytest.approx(w.closed_form, rel=0.1)
    w4 = absorption_width_raman(MediumParams.raman(400, 0.01, 0.0))
    assert w4.numeric / w.numeric == pytest.approx(2.0, rel=0.1)


def test_raman_width_grows_with_decay():
    widths = [absorption_width_raman(MediumParams.raman(100, 0.01, g0)).numeric
              for g0 in (0.0, 0.01, 0.03, 0.1)]
    assert all(b > a for a, b in zip(widths, widths[1:]))


def _lambda_exponent(omega, c, gamma, gamma0, rabi, delta):
    # detuned three-level exponent, light shift compensated, background removed
    w = np.asarray(omega, dtype=float)
    a = gamma + 1j * delta
    x = gamma0 - 1j * w + 1j * rabi ** 2 / delta
    full = c * gamma * x / (a * x + rabi ** 2)
    return full - c * gamma / a


def test_raman_is_adiabatic_limit_of_lambda_system():
    p = MediumParams.raman(100, 0.01, 1e-3, delta1=1e3)
    w = np.array([0.0, 0.003, 0.01, 0.05, 0.3, 2.0])
    ref = _lambda_exponent(w, p.cooperativity, p.gamma, p.gamma0, p.omega_rabi, p.delta1)
    got = alpha_raman_atomic(w, p)
    assert np.max(np.abs(got - ref) / np.abs(ref)) < 0.01
