"""Complex propagation exponents for single-pass EIT and Raman media.

A probe quadrature entering the medium leaves it multiplied by
``exp(-alpha(omega))``; the real part of ``alpha`` is the (amplitude)
absorption, the imaginary part the propagation phase.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import GainRegimeWarning, NoWindowError
from .numerics import find_root_bracketed, first_crossing
from .params import MediumParams, pumping_rates

LN2 = math.log(2.0)


def eit_denominator(omega, params: MediumParams):
    """D(omega) = (gamma0 - i omega)(gamma - i omega) + Omega^2."""
    w = np.asarray(omega, dtype=float)
    p = params
    return (p.gamma0 - 1j * w) * (p.gamma - 1j * w) + p.omega_rabi ** 2


def alpha_eit_atomic(omega, params: MediumParams):
    """Atomic part of the EIT exponent, without the vacuum phase."""
    w = np.asarray(omega, dtype=float)
    p = params
    return p.cooperativity * p.gamma * (p.gamma0 - 1j * w) / eit_denominator(w, p)


def alpha_eit(omega, params: MediumParams):
    w = np.asarray(omega, dtype=float)
    return -1j * w * params.transit + alpha_eit_atomic(w, params)


def alpha_raman_atomic(omega, params: MediumParams):
    w = np.asarray(omega, dtype=float)
    gr = params.gamma_r
    return params.cooperativity * gr / (gr + params.gamma0 - 1j * w)


def alpha_raman(omega, params: MediumParams):
    w = np.asarray(omega, dtype=float)
    return -1j * w * params.transit + alpha_raman_atomic(w, params)


def absorption_zero_freq(params: MediumParams) -> float:
    """Zero-frequency EIT absorption A = C gamma gamma0 / (gamma gamma0 + Omega^2)."""
    p = params
    gg0 = p.gamma * p.gamma0
    return p.cooperativity * gg0 / (gg0 + p.omega_rabi ** 2)


def group_delay(params: MediumParams, approximate: bool = False) -> float:
    """Excess delay L/v_g - L/c, i.e. -d Im(alpha_atomic)/d omega at omega = 0.

    The exact slope has Omega^2 - gamma0^2 in the numerator; ``approximate``
    uses Omega^2 - gamma*gamma0 instead, which agrees to first order in
    gamma0/gamma.
    """
    p = params
    om2 = p.omega_rabi ** 2
    num = om2 - (p.gamma * p.gamma0 if approximate else p.gamma0 ** 2)
    return p.g2n * p.transit * num / (om2 + p.gamma * p.gamma0) ** 2


def group_velocity(params: MediumParams, approximate: bool = False) -> float:
    """EIT group velocity as a fraction of c."""
    p = params
    om2 = p.omega_rabi ** 2
    if om2 < p.gamma * p.gamma0:
        warnings.warn("Omega^2 < gamma*gamma0: absorption dominates, no slow light",
                      GainRegimeWarning, stacklevel=2)
    num = om2 - (p.gamma * p.gamma0 if approximate else p.gamma0 ** 2)
    return 1.0 / (1.0 + p.g2n * num / (om2 + p.gamma * p.gamma0) ** 2)


@dataclass(frozen=True)
class WidthResult:
    closed_form: float | None
    numeric: float | None

    @property
    def value(self):
        return self.numeric if self.numeric is not None else self.closed_form


def _numeric_width(g, scale: float, tol: float):
    # g < 0 inside the absorbing/transparent core, > 0 past the half point
    found = first_crossing(g, 1e-6 * scale, 1e6 * scale)
    if found is None:
        return None
    lo, hi = found
    return find_root_bracketed(g, lo, hi, tol)


def transparency_width_eit(params: MediumParams, tol: float = 1e-9) -> WidthResult:
    """Half-width of the EIT transparency window for field squeezing.

    Numeric definition: the first omega > 0 where exp(-2 Re alpha) has fallen
    to half of its omega = 0 value.
    """
    p = params
    c = p.cooperativity
    gamma_e, _ = pumping_rates(p)
    arg = (LN2 / (2 * c)) * (1 - c * p.gamma0 / gamma_e)
    closed = gamma_e * math.sqrt(arg) if arg >= 0 else None
    a0 = float(np.real(alpha_eit(0.0, p)))

    def g(w):
        return float(np.real(alpha_eit(w, p))) - a0 - LN2 / 2

    numeric = _numeric_width(g, p.gamma, tol)
    if closed is None and numeric is None:
        raise NoWindowError("C*gamma0 >= Gamma_E and no half-transmission point exists")
    return WidthResult(closed, numeric)


def absorption_width_raman(params: MediumParams, tol: float = 1e-9) -> WidthResult:
    """Half-width of the zero-frequency Raman absorption dip.

    Numeric definition: the omega > 0 where exp(-2 Re alpha') climbs back to
    half of its far-off-resonance value (1).  Zero when the dip never gets
    that deep.
    """
    p = params
    gr = p.gamma_r
    closed = math.sqrt(2 / LN2) * math.sqrt(p.cooperativity * gr * (gr + p.gamma0))

    def g(w):
        return LN2 / 2 - float(np.real(alpha_raman(w, p)))

    if g(0.0) >= 0:
        return WidthResult(closed, 0.0)
    return WidthResult(closed, _numeric_width(g, gr + p.gamma0, tol))
