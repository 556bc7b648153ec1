"""Squeezed-light to spin-squeezing transfer in atomic ensembles.

Single-pass EIT and Raman propagation, collective spin-noise spectra,
transfer efficiencies and the cavity comparison.
"""
__version__ = "0.1.0"

from .params import InputField, MediumParams, Scheme, db_to_linear, linear_to_db, validate  # noqa: E402
from .atomic import efficiency_asymptotic, efficiency_exact, spin_spectrum, spin_variance  # noqa: E402
from .cavity import efficiency_cavity  # noqa: E402

__all__ = [
    "InputField", "MediumParams", "Scheme", "db_to_linear", "linear_to_db", "validate",
    "efficiency_exact", "efficiency_asymptotic", "spin_spectrum", "spin_variance",
    "efficiency_cavity",
]
