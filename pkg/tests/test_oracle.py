import numpy as np
import pytest

from spinmem.atomic import breakdown, spin_spectrum
from spinmem.errors import ConvergenceWarning
from spinmem.oracle import grid_oracle_spin_spectrum, grid_oracle_weights
from spinmem.params import MediumParams

W50 = np.logspace(-4, 2, 50)


def max_rel_error(params, scheme, slices, s_in=0.5):
    ref = spin_spectrum(W50, s_in, params, scheme)
    got = grid_oracle_spin_spectrum(W50, params, slices, scheme, s_in=s_in,
                                    check_convergence=False)
    return np.max(np.abs(got - ref) / ref)


@pytest.mark.parametrize("scheme", ["eit", "raman"])
def test_matches_analytic(scheme, fig2_params, fig4_params):
    p = fig2_params if scheme == "eit" else fig4_params
    assert max_rel_error(p, scheme, 400) < 0.01


@pytest.mark.parametrize("scheme", ["eit", "raman"])
def test_each_weight_matches(scheme, fig2_params, fig4_params):
    p = fig2_params if scheme == "eit" else fig4_params
    b = breakdown(W50, p, scheme)
    got = grid_oracle_weights(W50, p, 800, scheme)
    for ref, arr in zip((b.b_f, b.b_coh, b.b_spin), got):
        assert np.allclose(arr, ref, rtol=0.01, atol=1e-3 * np.max(ref))


@pytest.mark.parametrize("scheme", ["eit", "raman"])
def test_convergence_rate(scheme, fig2_params, fig4_params):
    p = fig2_params if scheme == "eit" else fig4_params
    errs = [max_rel_error(p, scheme, n) for n in (100, 200, 400)]
    rates = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert np.all(rates >= 0.9)


def test_decoupled_spin_is_lorentzian():
    p = MediumParams(gamma0=1e-3, omega_rabi=1e-6, g2n=1e-12, transit=0.01)
    s = grid_oracle_spin_spectrum(W50, p, 100, "eit", check_convergence=False)
    lor = p.n_atoms / 4 * 2 * p.gamma0 / (p.gamma0 ** 2 + W50 ** 2)
    assert np.allclose(s, lor, rtol=1e-6)


def test_decoupled_raman_spin_relaxes_at_total_rate():
    p = MediumParams.raman(100, 0.01, 1e-3).with_(g2n=1e-12)
    s = grid_oracle_spin_spectrum(W50, p, 100, "raman", check_convergence=False)
    g = p.gamma_r + p.gamma0
    assert np.allclose(s, p.n_atoms / 4 * 2 * g / (g * g + W50 ** 2), rtol=1e-6)


@pytest.mark.parametrize("scheme", ["eit", "raman"])
def test_coherent_integral(scheme, fig2_params, fig4_params):
    p = fig2_params if scheme == "eit" else fig4_params
    w = np.logspace(-8, 5, 3000)
    s = grid_oracle_spin_spectrum(w, p, 400, scheme, s_in=1.0, check_convergence=False)
    # int_{-inf}^{inf} dw/2pi = (1/pi) int_0^inf w S d(ln w)
    total = np.trapezoid(s * w, np.log(w)) / np.pi
    assert total == pytest.approx(p.n_atoms / 4, rel=0.01)


def test_convergence_warning(fig2_params):
    with pytest.warns(ConvergenceWarning):
        grid_oracle_spin_spectrum(W50, fig2_params, 20, "eit")


def test_rejects_bad_input(fig2_params):
    with pytest.raises(ValueError):
        grid_oracle_weights(W50, fig2_params, 0)
    with pytest.raises(ValueError):
        grid_oracle_weights(W50, MediumParams.cavity(100, 0.1, 1e-3), 100, "cavity-eit")
