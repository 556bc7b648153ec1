"""Collective spin-noise spectra and squeezing transfer efficiencies.

The linearised field/dipole/ground-coherence system is solved by a Fourier
transform in time and a Laplace transform in space.  The collective spin
quadrature coupled to the probe amplitude then reads

    J(omega) = N B1 phi1(alpha) X_in + sum_i N/L int dz k_i(z) f_i(z)

where each Langevin source f_i is delta-correlated in z with diffusion
constant D_i.  Normalising the spectrum by the coherent-state value N/4 gives
the three weights B_f (input field), B_coh (spontaneous emission) and B_spin
(ground-state decoherence); for a vacuum input they integrate to one.

Lengths are measured in units of the medium length L, so ``g^2 N / c`` is
``g2n * transit``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SumRuleViolation
from .numerics import integrate_infinite, mean_abs2_kernel, phi1
from .params import MediumParams, Scheme, pumping_rates, regime_flags
from .propagation import (
    alpha_eit,
    alpha_raman,
    alpha_raman_atomic,
    eit_denominator,
)

# Symmetrised diffusion constants, in units of the relevant decay rate:
# D_sigma_y = gamma/2, D_jx = gamma0/2 (and Gamma_R/2, gamma0/2 for the Raman
# coherence).  With every atom in level 2 these reproduce the coherent-state
# variance 1/4 per atom.
DIFFUSION = 0.5


@dataclass(frozen=True)
class LaplaceCoefficients:
    """Frequency-domain coefficients of the EIT spatial solution.

    ``s0`` is the spatial decay rate (per unit L), ``b2_zero``/``b3_zero`` the
    zeros of the source kernels, so that in Laplace space

        j_x[s] = B1/(s+s0) X_in + B2 (s-b2)/(s+s0) f_sigma + B3 (s-b3)/(s+s0) f_j
    """

    omega: np.ndarray
    b1: np.ndarray
    b2_coeff: np.ndarray
    b3_coeff: np.ndarray
    s0: np.ndarray
    b2_zero: np.ndarray
    b3_zero: np.ndarray
    d: np.ndarray

    @property
    def lambda2(self):
        return self.s0 + self.b2_zero

    @property
    def lambda3(self):
        return self.s0 + self.b3_zero


@dataclass(frozen=True)
class SpinSpectrumBreakdown:
    omega: np.ndarray
    b_f: np.ndarray
    b_coh: np.ndarray
    b_spin: np.ndarray

    def total(self, s_in=1.0):
        """Spectrum normalised to the coherent-state value N/4."""
        return self.b_f * s_in + self.b_coh + self.b_spin


@dataclass(frozen=True)
class EfficiencyReport:
    eta_exact: float
    eta_asymptotic: float
    scheme: Scheme
    regime_flags: dict = field(default_factory=dict)
    notes: str = ""


def laplace_coefficients(omega, params: MediumParams) -> LaplaceCoefficients:
    p = params
    w = np.asarray(omega, dtype=float)
    d = eit_denominator(w, p)
    g = math.sqrt(p.g2n / p.n_atoms)
    om = p.omega_rabi
    g2n_over_c = p.g2n * p.transit
    s0 = -1j * w * p.transit + g2n_over_c * (p.gamma0 - 1j * w) / d
    return LaplaceCoefficients(
        omega=w,
        b1=-(g * om / 2) / d,
        b2_coeff=-om / d,
        b3_coeff=(p.gamma - 1j * w) / d,
        s0=s0,
        b2_zero=1j * w * p.transit,
        b3_zero=1j * w * p.transit - g2n_over_c / (p.gamma - 1j * w),
        d=d,
    )


# -- field-driven weight -------------------------------------------------------

def b_f_eit(omega, params: MediumParams):
    p = params
    w = np.asarray(omega, dtype=float)
    gamma_e, _ = pumping_rates(p)
    d = eit_denominator(w, p)
    return (p.cooperativity * gamma_e * p.gamma ** 2 / np.abs(d) ** 2
            * np.abs(phi1(alpha_eit(w, p))) ** 2)


def b_f_raman(omega, params: MediumParams):
    p = params
    w = np.asarray(omega, dtype=float)
    gr = p.gamma_r
    return (p.cooperativity * gr / ((gr + p.gamma0) ** 2 + w ** 2)
            * np.abs(phi1(alpha_raman(w, p))) ** 2)


def b_f(omega, params: MediumParams, scheme: Scheme | str):
    scheme = _single_pass(scheme)
    if scheme is Scheme.SINGLE_PASS_EIT:
        return b_f_eit(omega, params)
    return b_f_raman(omega, params)


# -- Langevin-driven weights ---------------------------------------------------

def noise_contributions(omega, params: MediumParams, scheme: Scheme | str):
    """(B_coh, B_spin): spontaneous-emission and ground-decoherence weights."""
    scheme = _single_pass(scheme)
    p = params
    w = np.asarray(omega, dtype=float)
    if scheme is Scheme.SINGLE_PASS_EIT:
        lc = laplace_coefficients(w, p)
        alpha = lc.s0  # L = 1
        k_sigma = np.abs(lc.b2_coeff) ** 2 * mean_abs2_kernel(lc.lambda2, alpha)
        k_j = np.abs(lc.b3_coeff) ** 2 * mean_abs2_kernel(lc.lambda3, alpha)
        b_coh = 4 * DIFFUSION * p.gamma * k_sigma
        b_spin = 4 * DIFFUSION * p.gamma0 * k_j
        return b_coh, b_spin
    # Raman: a single coherence decaying at Gamma_R + gamma0 carries both sources
    gr = p.gamma_r
    local = 1.0 / np.abs(gr + p.gamma0 - 1j * w) ** 2
    k = local * mean_abs2_kernel(alpha_raman_atomic(w, p), alpha_raman(w, p))
    return 4 * DIFFUSION * gr * k, 4 * DIFFUSION * p.gamma0 * k


def breakdown(omega, params: MediumParams, scheme: Scheme | str) -> SpinSpectrumBreakdown:
    w = np.asarray(omega, dtype=float)
    coh, spin = noise_contributions(w, params, scheme)
    return SpinSpectrumBreakdown(w, b_f(w, params, scheme), coh, spin)


def spin_spectrum(omega, s_in, params: MediumParams, scheme: Scheme | str):
    """Spectrum of the spin component fed by the probe amplitude quadrature.

    That is J_x for EIT and J_y for Raman.  Absolute units (coherent state
    integrates to N/4).
    """
    return params.n_atoms / 4 * breakdown(omega, params, scheme).total(s_in)


# -- frequency integrals -------------------------------------------------------

def characteristic_frequencies(params: MediumParams, scheme: Scheme | str):
    """Frequencies where the spectra change shape; used as quadrature breakpoints."""
    scheme = Scheme.parse(scheme)
    p = params
    c = p.cooperativity
    if scheme.is_raman:
        gr = p.gamma_r
        gp = gr + p.gamma0
        return [gp, math.sqrt(c * gr * gp), c * gr, p.gamma]
    gamma_e, _ = pumping_rates(p)
    hints = [gamma_e / c, gamma_e / math.sqrt(c), p.omega_rabi, p.gamma]
    if p.gamma0 > 0:
        hints.append(p.gamma0)
    return hints


def _integrate(func, params, scheme, tol=None):
    return integrate_infinite(func, tol=tol, scale=params.gamma,
                              hints=characteristic_frequencies(params, scheme),
                              even=True)


def efficiency_exact(params: MediumParams, scheme: Scheme | str, tol=None) -> float:
    """Squeezing transfer efficiency: the frequency integral of B_f."""
    scheme = _single_pass(scheme)
    return _integrate(lambda w: float(b_f(w, params, scheme)), params, scheme, tol).value


def efficiency_asymptotic(params: MediumParams, scheme: Scheme | str) -> float:
    """Large-cooperativity closed forms for the single-pass efficiency."""
    scheme = _single_pass(scheme)
    p = params
    c = p.cooperativity
    base = math.sqrt(2 / math.pi) / math.sqrt(c)
    if scheme is Scheme.SINGLE_PASS_EIT:
        gamma_e, _ = pumping_rates(p)
        return 1 - base - c * p.gamma0 / gamma_e
    return 1 - base * math.sqrt(1 + p.gamma0 / p.gamma_r)


def integrated_weights(params: MediumParams, scheme: Scheme | str, tol=None):
    """Frequency integrals (int B_f, int B_coh, int B_spin) d omega / 2 pi."""
    scheme = _single_pass(scheme)
    eta = efficiency_exact(params, scheme, tol)
    coh = _integrate(lambda w: float(noise_contributions(w, params, scheme)[0]),
                     params, scheme, tol).value
    if params.gamma0 == 0:
        spin = 0.0
    else:
        spin = _integrate(lambda w: float(noise_contributions(w, params, scheme)[1]),
                          params, scheme, tol).value
    return eta, coh, spin


def check_sum_rule(params: MediumParams, scheme: Scheme | str, tol: float = 1e-3) -> float:
    """Integral of B_f + B_coh + B_spin; raises SumRuleViolation if it is not 1."""
    total = sum(integrated_weights(params, scheme))
    if abs(total - 1) > tol:
        raise SumRuleViolation(f"weights integrate to {total:.6f}, expected 1")
    return total


def spin_variance(s_in, params: MediumParams, scheme: Scheme | str, tol=None):
    """(Delta J^2, Delta J^2 / (N/4)) for the coupled spin component."""
    eta, coh, spin = integrated_weights(params, scheme, tol)
    normalized = eta * s_in + coh + spin
    return params.n_atoms / 4 * normalized, normalized


def efficiency_report(params: MediumParams, scheme: Scheme | str) -> EfficiencyReport:
    scheme = Scheme.parse(scheme)
    if scheme.is_cavity:
        from .cavity import cavity_report
        return cavity_report(params, scheme)
    return EfficiencyReport(
        eta_exact=efficiency_exact(params, scheme),
        eta_asymptotic=efficiency_asymptotic(params, scheme),
        scheme=scheme,
        regime_flags=regime_flags(params, scheme),
    )


def _single_pass(scheme) -> Scheme:
    scheme = Scheme.parse(scheme)
    if scheme.is_cavity:
        raise ValueError(f"{scheme.value} is not a single-pass scheme")
    return scheme
