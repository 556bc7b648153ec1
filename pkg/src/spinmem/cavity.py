"""Cavity-scheme quantities for comparison with single-pass propagation.

Only the channel driven by the incident field X^in is modelled: effective
ground-state linewidths, the intracavity coefficient of X^in, and the
closed-form transfer efficiencies.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .atomic import EfficiencyReport
from .errors import MissingCavityTransmission
from .params import MediumParams, Scheme, pumping_rates, regime_flags

RAMAN_NOTE = "model-interpolated: cooperativity reduced to C*Gamma_R/(Gamma_R+gamma0)"


def _cavity(params: MediumParams, scheme) -> tuple[Scheme, float]:
    scheme = Scheme.parse(scheme)
    if not scheme.is_cavity:
        raise ValueError(f"{scheme.value} is not a cavity scheme")
    if params.cavity_T is None:
        raise MissingCavityTransmission(f"{scheme.value} requires cavity_T")
    return scheme, params.cavity_cooperativity


def effective_linewidth(params: MediumParams, scheme: Scheme | str) -> float:
    scheme, c = _cavity(params, scheme)
    gamma_e, gamma_r = pumping_rates(params)
    if scheme is Scheme.CAVITY_EIT:
        return params.gamma0 + gamma_e / (1 + 2 * c)
    return params.gamma0 + (1 + 2 * c) * gamma_r


def intracavity_input_coefficient(omega, params: MediumParams, scheme: Scheme | str):
    """Coefficient multiplying X^in in the intracavity amplitude quadrature."""
    scheme, c = _cavity(params, scheme)
    w = np.asarray(omega, dtype=float)
    gt = effective_linewidth(params, scheme)
    pref = 2 / np.sqrt(params.cavity_T)
    if scheme is Scheme.CAVITY_EIT:
        return pref / (1 + 2 * c) * (1 + 2 * c * gt / (gt - 1j * w))
    return pref * (params.gamma_r - 1j * w) / (gt - 1j * w)


def output_input_coefficient(omega, params: MediumParams, scheme: Scheme | str):
    """X^out / X^in from X^out = sqrt(T) X - X^in (atomic noise omitted)."""
    return np.sqrt(params.cavity_T) * intracavity_input_coefficient(omega, params, scheme) - 1


def effective_cooperativity(params: MediumParams, scheme: Scheme | str) -> float:
    """Cooperativity after ground-state decoherence (reduced only for Raman)."""
    scheme, c = _cavity(params, scheme)
    if scheme is Scheme.CAVITY_RAMAN:
        gr = params.gamma_r
        return c * gr / (gr + params.gamma0)
    return c


def efficiency_cavity(params: MediumParams, scheme: Scheme | str) -> float:
    scheme, c = _cavity(params, scheme)
    if scheme is Scheme.CAVITY_EIT:
        gamma_e, _ = pumping_rates(params)
        pumped = gamma_e / (1 + 2 * c)
        return 2 * c / (1 + 2 * c) * pumped / (params.gamma0 + pumped)
    ce = effective_cooperativity(params, scheme)
    return 2 * ce / (1 + 2 * ce)


def efficiency_cavity_approx(params: MediumParams, scheme: Scheme | str) -> float:
    """First-order expansion, valid for C >> 1 and Gamma_E >> gamma0."""
    scheme, c = _cavity(params, scheme)
    if scheme is Scheme.CAVITY_EIT:
        gamma_e, _ = pumping_rates(params)
        return 1 - 1 / (1 + 2 * c) - (1 + 2 * c) * params.gamma0 / gamma_e
    return 1 - 1 / (1 + 2 * effective_cooperativity(params, scheme))


@dataclass(frozen=True)
class CavityComparison:
    params: MediumParams
    scheme: Scheme
    gamma_tilde: float
    eta_cavity: float
    notes: str = ""
    flags: dict = field(default_factory=dict)

    def input_coefficient(self, omega):
        return intracavity_input_coefficient(omega, self.params, self.scheme)


def cavity_comparison(params: MediumParams, scheme: Scheme | str) -> CavityComparison:
    scheme, _ = _cavity(params, scheme)
    return CavityComparison(
        params=params,
        scheme=scheme,
        gamma_tilde=effective_linewidth(params, scheme),
        eta_cavity=efficiency_cavity(params, scheme),
        notes=RAMAN_NOTE if scheme is Scheme.CAVITY_RAMAN else "",
        flags=regime_flags(params, scheme),
    )


def cavity_report(params: MediumParams, scheme: Scheme | str) -> EfficiencyReport:
    scheme, _ = _cavity(params, scheme)
    return EfficiencyReport(
        eta_exact=efficiency_cavity(params, scheme),
        eta_asymptotic=efficiency_cavity_approx(params, scheme),
        scheme=scheme,
        regime_flags=regime_flags(params, scheme),
        notes=RAMAN_NOTE if scheme is Scheme.CAVITY_RAMAN else "",
    )
