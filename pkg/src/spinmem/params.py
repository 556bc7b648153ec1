"""Physical parameter set, interaction schemes and unit conventions.

All rates are expressed in units of the optical dipole decay rate ``gamma``
(stored as 1.0 by default), frequencies in the same units and times in
``1/gamma``.  Formulas keep ``gamma`` explicit so that a consistent rescaling
of every rate (and inverse rescaling of every time) leaves all dimensionless
results unchanged.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field, replace

from .errors import (
    MissingCavityTransmission,
    MissingDetuning,
    NonPositiveParameter,
    RegimeWarning,
)

# g^2 N used when only the cooperativity is given; keeps the vacuum transit
# time L/c = C/g2n negligible over every figure bandwidth.
DEFAULT_G2N = 1.0e4
DEFAULT_N_ATOMS = 1.0e6


class Scheme(enum.Enum):
    SINGLE_PASS_EIT = "eit"
    SINGLE_PASS_RAMAN = "raman"
    CAVITY_EIT = "cavity-eit"
    CAVITY_RAMAN = "cavity-raman"

    @property
    def is_cavity(self) -> bool:
        return self in (Scheme.CAVITY_EIT, Scheme.CAVITY_RAMAN)

    @property
    def is_raman(self) -> bool:
        return self in (Scheme.SINGLE_PASS_RAMAN, Scheme.CAVITY_RAMAN)

    @classmethod
    def parse(cls, value) -> "Scheme":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        for s in cls:
            if key in (s.value, s.name.lower().replace("_", "-")):
                return s
        raise ValueError(f"unknown scheme {value!r}")


@dataclass(frozen=True)
class MediumParams:
    """Atomic ensemble + control field parameters (units of gamma)."""

    gamma0: float
    omega_rabi: float
    g2n: float
    transit: float
    delta1: float = 0.0
    n_atoms: float = DEFAULT_N_ATOMS
    cavity_T: float | None = None
    gamma: float = 1.0

    @property
    def cooperativity(self) -> float:
        """Single-pass cooperativity g^2 N L / (gamma c)."""
        return self.g2n * self.transit / self.gamma

    @property
    def cavity_cooperativity(self) -> float:
        """Cavity cooperativity g^2 N / (T gamma)."""
        if self.cavity_T is None:
            raise MissingCavityTransmission("cavity cooperativity needs cavity_T")
        return self.g2n / (self.cavity_T * self.gamma)

    def cooperativity_for(self, scheme: Scheme) -> float:
        return self.cavity_cooperativity if scheme.is_cavity else self.cooperativity

    @property
    def gamma_e(self) -> float:
        return pumping_rates(self)[0]

    @property
    def gamma_r(self) -> float:
        rates = pumping_rates(self)
        if rates[1] is None:
            raise MissingDetuning("Raman pumping rate needs a nonzero delta1")
        return rates[1]

    def with_(self, **changes) -> "MediumParams":
        return replace(self, **changes)

    # -- constructors parameterised the way the figures are -----------------

    @classmethod
    def eit(cls, cooperativity: float, gamma_e: float, gamma0: float,
            g2n: float = DEFAULT_G2N, gamma: float = 1.0, **kw) -> "MediumParams":
        """Single-pass EIT medium with given C and optical pumping Gamma_E."""
        return cls(gamma0=gamma0, omega_rabi=math.sqrt(gamma_e * gamma),
                   g2n=g2n, transit=cooperativity * gamma / g2n, gamma=gamma, **kw)

    @classmethod
    def raman(cls, cooperativity: float, gamma_r: float, gamma0: float,
              delta1: float = 10.0, g2n: float = DEFAULT_G2N, gamma: float = 1.0,
              **kw) -> "MediumParams":
        """Single-pass Raman medium; Omega chosen so gamma*Omega^2/Delta^2 = gamma_r."""
        omega = abs(delta1) * math.sqrt(gamma_r / gamma)
        return cls(gamma0=gamma0, omega_rabi=omega, delta1=delta1, g2n=g2n,
                   transit=cooperativity * gamma / g2n, gamma=gamma, **kw)

    @classmethod
    def cavity(cls, cooperativity: float, cavity_T: float, gamma0: float,
               gamma_e: float | None = None, gamma_r: float | None = None,
               delta1: float = 10.0, gamma: float = 1.0, **kw) -> "MediumParams":
        """Cavity medium with g^2 N fixed by C = g^2 N / (T gamma)."""
        if gamma_r is not None:
            omega = abs(delta1) * math.sqrt(gamma_r / gamma)
        else:
            omega = math.sqrt((10.0 if gamma_e is None else gamma_e) * gamma)
            delta1 = 0.0
        g2n = cooperativity * cavity_T * gamma
        return cls(gamma0=gamma0, omega_rabi=omega, delta1=delta1, g2n=g2n,
                   transit=0.0, cavity_T=cavity_T, gamma=gamma, **kw)


@dataclass(frozen=True)
class InputField:
    """Broadband squeezed vacuum; amplitude-quadrature spectrum (shot noise = 1)."""

    s_x_in: float

    def __post_init__(self):
        if not self.s_x_in > 0:
            raise NonPositiveParameter("s_x_in must be > 0")

    @property
    def s_y_in(self) -> float:
        return 1.0 / self.s_x_in

    @classmethod
    def from_db(cls, squeezing_db: float) -> "InputField":
        return cls(db_to_linear(squeezing_db))


@dataclass(frozen=True)
class ValidatedParams:
    params: MediumParams
    scheme: Scheme
    cooperativity: float
    gamma_e: float
    gamma_r: float | None
    flags: dict = field(default_factory=dict)


def pumping_rates(params: MediumParams) -> tuple[float, float | None]:
    """Optical pumping rates (Gamma_E, Gamma_R).

    Gamma_R is None when no one-photon detuning is set.
    """
    om2 = params.omega_rabi ** 2
    gamma_e = om2 / params.gamma
    if params.delta1 == 0:
        return gamma_e, None
    return gamma_e, params.gamma * om2 / params.delta1 ** 2


def _check_signs(p: MediumParams):
    positive = {"gamma": p.gamma, "omega_rabi": p.omega_rabi, "g2n": p.g2n}
    for name, v in positive.items():
        if not v > 0:
            raise NonPositiveParameter(f"{name} must be > 0, got {v}")
    for name, v in {"gamma0": p.gamma0, "transit": p.transit}.items():
        if not v >= 0:
            raise NonPositiveParameter(f"{name} must be >= 0, got {v}")
    if not p.n_atoms >= 1:
        raise NonPositiveParameter(f"n_atoms must be >= 1, got {p.n_atoms}")
    if p.cavity_T is not None and not 0 < p.cavity_T <= 1:
        raise NonPositiveParameter(f"cavity_T must lie in (0, 1], got {p.cavity_T}")


def regime_flags(params: MediumParams, scheme: Scheme) -> dict:
    """Advisory regime checks; "<<" is evaluated as a strict "<"."""
    p = params
    c = p.cooperativity_for(scheme)
    gamma_e, gamma_r = pumping_rates(p)
    flags = {}
    if scheme.is_raman:
        flags["raman_detuning"] = abs(p.delta1) > p.gamma
        flags["raman_slow_pumping"] = gamma_r < p.gamma
        if scheme is Scheme.SINGLE_PASS_RAMAN:
            w = math.sqrt(c) * gamma_r
            flags["raman_transfer_regime"] = p.gamma0 < w < p.gamma
    else:
        if scheme is Scheme.SINGLE_PASS_EIT:
            w = gamma_e / math.sqrt(c)
            flags["eit_transfer_regime"] = p.gamma0 < w < p.gamma
        flags["eit_pumping_dominates"] = gamma_e > p.gamma0
    return flags


def validate(params: MediumParams, scheme: Scheme | str = Scheme.SINGLE_PASS_EIT) -> ValidatedParams:
    """Check sign constraints, attach derived rates and regime flags.

    Regime flags never raise; each false flag emits a ``RegimeWarning``.
    """
    scheme = Scheme.parse(scheme)
    _check_signs(params)
    if scheme.is_cavity and params.cavity_T is None:
        raise MissingCavityTransmission(f"{scheme.value} requires cavity_T")
    if scheme.is_raman and params.delta1 == 0:
        raise MissingDetuning("Raman schemes require a nonzero delta1")
    c = params.cooperativity_for(scheme)
    if not c > 0:
        raise NonPositiveParameter(f"cooperativity must be > 0, got {c}")
    gamma_e, gamma_r = pumping_rates(params)
    flags = regime_flags(params, scheme)
    for name, ok in flags.items():
        if not ok:
            warnings.warn(f"regime check {name!r} not satisfied", RegimeWarning,
                          stacklevel=2)
    return ValidatedParams(params, scheme, c, gamma_e, gamma_r, flags)


def db_to_linear(db):
    """Squeezing in dB below shot noise -> linear noise power (3 dB -> ~0.5)."""
    return 10.0 ** (-db / 10.0)


def linear_to_db(value):
    return -10.0 * math.log10(value)


# -- key/value configuration --------------------------------------------------

CONFIG_KEYS = ("gamma0", "omega_rabi", "delta1", "g2n", "transit", "n_atoms",
               "cavity_T", "cooperativity")


def load_config(path) -> dict:
    """Read a ``key = value`` parameter file (``#`` starts a comment)."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = None if value.lower() in ("", "none") else float(value)
    return out


def params_from_mapping(values: dict, scheme: Scheme | str) -> MediumParams:
    """Build parameters from loosely specified keys.

    ``cooperativity`` may stand in for ``transit`` (single pass) or for ``g2n``
    (cavity).  Missing control-field settings fall back to the figure values:
    Gamma_E = 10 gamma for EIT, Omega = gamma with Delta = 10 gamma for Raman.
    """
    scheme = Scheme.parse(scheme)
    v = {k: x for k, x in values.items() if x is not None}
    gamma = 1.0
    c = v.get("cooperativity")
    delta1 = v.get("delta1", 10.0 if scheme.is_raman else 0.0)
    omega = v.get("omega_rabi", 1.0 if scheme.is_raman else math.sqrt(10.0))
    kw = dict(gamma0=v.get("gamma0", 1e-3), omega_rabi=omega, delta1=delta1,
              n_atoms=v.get("n_atoms", DEFAULT_N_ATOMS), gamma=gamma)
    if scheme.is_cavity:
        t = v.get("cavity_T", 0.1)
        g2n = v.get("g2n", c * t * gamma if c is not None else None)
        if g2n is None:
            raise ValueError("cavity schemes need g2n or cooperativity")
        return MediumParams(g2n=g2n, transit=v.get("transit", 0.0), cavity_T=t, **kw)
    g2n = v.get("g2n", DEFAULT_G2N)
    if "transit" in v:
        transit = v["transit"]
    elif c is not None:
        transit = c * gamma / g2n
    else:
        raise ValueError("single-pass schemes need transit or cooperativity")
    return MediumParams(g2n=g2n, transit=transit, cavity_T=v.get("cavity_T"), **kw)
