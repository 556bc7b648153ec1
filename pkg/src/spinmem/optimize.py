"""Choice of control-field strength that maximises the transfer efficiency."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import atomic, cavity
from .errors import BoundsError
from .numerics import golden_section_max
from .params import MediumParams, Scheme, pumping_rates, regime_flags


@dataclass(frozen=True)
class OptimizeReport:
    scheme: Scheme
    omega_rabi: float
    pumping_rate: float
    eta: float
    regime_flags: dict


def _eta(params, scheme):
    if scheme.is_cavity:
        return cavity.efficiency_cavity(params, scheme)
    return atomic.efficiency_exact(params, scheme)


def optimize_pumping(params: MediumParams, scheme: Scheme | str, bounds, tol=1e-4) -> OptimizeReport:
    """Golden-section maximisation of the efficiency over log(Omega) in ``bounds``."""
    scheme = Scheme.parse(scheme)
    lo, hi = bounds
    if not (lo > 0 and hi > 0) or lo > hi:
        raise BoundsError(f"Rabi frequency bounds must satisfy 0 < lo <= hi, got {bounds}")

    def objective(log_om):
        return _eta(params.with_(omega_rabi=math.exp(log_om)), scheme)

    x, eta = golden_section_max(objective, math.log(lo), math.log(hi), tol)
    best = params.with_(omega_rabi=math.exp(x))
    gamma_e, gamma_r = pumping_rates(best)
    return OptimizeReport(scheme, best.omega_rabi,
                          gamma_r if scheme.is_raman else gamma_e, eta,
                          regime_flags(best, scheme))
