"""Outgoing probe-field quadrature noise spectra after a single pass."""
from __future__ import annotations

import numpy as np

from .params import MediumParams, Scheme
from .propagation import alpha_eit, alpha_raman


def attenuate(s_in, alpha):
    """Beam-splitter-like loss: the input excess noise decays as exp(-2 Re alpha)."""
    return 1.0 - (1.0 - s_in) * np.exp(-2.0 * np.real(alpha))


def s_out_eit(omega, s_in, params: MediumParams):
    return attenuate(s_in, alpha_eit(omega, params))


def s_out_raman(omega, s_in, params: MediumParams):
    return attenuate(s_in, alpha_raman(omega, params))


def s_out(omega, s_in, params: MediumParams, scheme: Scheme | str):
    scheme = Scheme.parse(scheme)
    if scheme is Scheme.SINGLE_PASS_EIT:
        return s_out_eit(omega, s_in, params)
    if scheme is Scheme.SINGLE_PASS_RAMAN:
        return s_out_raman(omega, s_in, params)
    raise ValueError(f"no output field spectrum for {scheme.value}; "
                     "only the X^in transfer coefficient is modelled in a cavity")


def conjugate_quadrature_spectrum(omega, s_in, params: MediumParams, scheme: Scheme | str):
    """Phase-quadrature output for a minimum-uncertainty input (S_Y^in = 1/S_X^in)."""
    return s_out(omega, 1.0 / s_in, params, scheme)
