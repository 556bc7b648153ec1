"""Datasets fig1 to fig5 at their reference operating points."""
from __future__ import annotations

import numpy as np

from . import atomic, cavity
from .errors import UnknownFigure
from .field import s_out_eit, s_out_raman
from .params import MediumParams, db_to_linear

COOPERATIVITY = 100.0
GAMMA_E = 10.0
GAMMA_R = 0.01
GAMMA0 = 1e-3
GAMMA0_CURVES = (0.0, 1e-3, 1e-2, 1e-1)
S_IN = float(db_to_linear(3.0103))
# large g^2 N keeps the vacuum transit C/g2n negligible up to C = 1000
SWEEP_G2N = 1.0e6
CURVE_LABELS = "abcd"


def _grid(omega_min, omega_max, points, log_grid):
    if log_grid:
        return np.logspace(np.log10(omega_min), np.log10(omega_max), points)
    return np.linspace(omega_min, omega_max, points)


def _field_figure(kind, cooperativity, gamma0s, s_in, grid, **_):
    w = _grid(*grid)
    cols = {"omega_over_gamma": w}
    for label, g0 in zip(CURVE_LABELS, gamma0s):
        if kind == "eit":
            p = MediumParams.eit(cooperativity, GAMMA_E, g0)
            cols[f"s_out_{label}"] = s_out_eit(w, s_in, p)
        else:
            p = MediumParams.raman(cooperativity, GAMMA_R, g0)
            cols[f"s_out_{label}"] = s_out_raman(w, s_in, p)
    meta = {"cooperativity": cooperativity, "s_in": s_in,
            "gamma0_curves": list(gamma0s)}
    meta["gamma_e" if kind == "eit" else "gamma_r"] = GAMMA_E if kind == "eit" else GAMMA_R
    return cols, meta


def _spin_figure(kind, cooperativity, gamma0, s_in, grid, **_):
    w = _grid(*grid)
    if kind == "eit":
        p, scheme = MediumParams.eit(cooperativity, GAMMA_E, gamma0), "eit"
    else:
        p, scheme = MediumParams.raman(cooperativity, GAMMA_R, gamma0), "raman"
    b = atomic.breakdown(w, p, scheme)
    eta, coh, spin = atomic.integrated_weights(p, scheme)
    cols = {"omega_over_gamma": w,
            "s_j_coherent": b.total(1.0),
            "s_j_squeezed": b.total(s_in),
            "b_f": b.b_f, "b_coh": b.b_coh, "b_spin": b.b_spin}
    meta = {"cooperativity": cooperativity, "gamma0": gamma0, "s_in": s_in,
            "eta_exact": eta,
            "variance_coherent_normalized": eta + coh + spin,
            "variance_squeezed_normalized": eta * s_in + coh + spin}
    meta["gamma_e" if kind == "eit" else "gamma_r"] = GAMMA_E if kind == "eit" else GAMMA_R
    return cols, meta


def fig1(cooperativity=COOPERATIVITY, gamma0s=GAMMA0_CURVES, s_in=S_IN,
         grid=(0.0, 3.0, 301, False)):
    """Outgoing EIT field spectra for four ground-state decay rates."""
    return _field_figure("eit", cooperativity, gamma0s, s_in, grid)


def fig2(cooperativity=COOPERATIVITY, gamma0=GAMMA0, s_in=S_IN,
         grid=(0.0, 2.0, 401, False)):
    """EIT spin spectrum for coherent and 3 dB squeezed input."""
    return _spin_figure("eit", cooperativity, gamma0, s_in, grid)


def fig3(cooperativity=COOPERATIVITY, gamma0s=GAMMA0_CURVES, s_in=S_IN,
         grid=(0.0, 2.0, 401, False)):
    """Outgoing Raman field spectra for four ground-state decay rates."""
    return _field_figure("raman", cooperativity, gamma0s, s_in, grid)


def fig4(cooperativity=COOPERATIVITY, gamma0=GAMMA0, s_in=S_IN,
         grid=(0.0, 5.0, 501, False)):
    """Raman spin spectrum for coherent and 3 dB squeezed input."""
    return _spin_figure("raman", cooperativity, gamma0, s_in, grid)


def fig5(gamma0=GAMMA0, c_values=None, cavity_T=0.1):
    """Transfer efficiency against cooperativity, cavity vs single pass.

    ``curve_a`` names the column drawn as the upper curve: cavity Raman.
    """
    cs = np.logspace(0, 3, 31) if c_values is None else np.asarray(c_values, dtype=float)
    cols = {k: np.empty(cs.size) for k in
            ("eta_cavity_eit", "eta_cavity_raman", "eta_sp_eit", "eta_sp_raman")}
    for i, c in enumerate(cs):
        ce = MediumParams.cavity(c, cavity_T, gamma0, gamma_e=GAMMA_E)
        cr = MediumParams.cavity(c, cavity_T, gamma0, gamma_r=GAMMA_R)
        cols["eta_cavity_eit"][i] = cavity.efficiency_cavity(ce, "cavity-eit")
        cols["eta_cavity_raman"][i] = cavity.efficiency_cavity(cr, "cavity-raman")
        cols["eta_sp_eit"][i] = atomic.efficiency_exact(
            MediumParams.eit(c, GAMMA_E, gamma0, g2n=SWEEP_G2N), "eit")
        cols["eta_sp_raman"][i] = atomic.efficiency_exact(
            MediumParams.raman(c, GAMMA_R, gamma0, g2n=SWEEP_G2N), "raman")
    meta = {"gamma0": gamma0, "gamma_e": GAMMA_E, "gamma_r": GAMMA_R,
            "cavity_T": cavity_T, "g2n": SWEEP_G2N, "curve_a": "eta_cavity_raman"}
    return {"cooperativity": cs, **cols}, meta


FIGURES = {"fig1": fig1, "fig2": fig2, "fig3": fig3, "fig4": fig4, "fig5": fig5}


def figure_dataset(name: str, **overrides):
    try:
        builder = FIGURES[name]
    except KeyError:
        raise UnknownFigure(f"unknown figure {name!r}; choose from {sorted(FIGURES)}") from None
    cols, meta = builder(**overrides)
    return cols, {"figure": name, **meta}
