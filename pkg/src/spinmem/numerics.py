"""Shared numerical kernels: propagation factors, quadrature, root finding."""
from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import BoundsError, NoBracket, QuadratureFailure

DEFAULT_TOL = 1e-8
ACCEPT_TOL = 1e-6
MAX_PANELS = 10_000

_INV_PHI = (math.sqrt(5) - 1) / 2

# Gauss-Legendre nodes on [0, 1] for the small-exponent branch of mean_abs2_profile
_GL_T, _GL_W = np.polynomial.legendre.leggauss(16)
_GL_T = 0.5 * (_GL_T + 1.0)
_GL_W = 0.5 * _GL_W


def default_tol() -> float:
    env = os.environ.get("SPINMEM_TOL")
    return float(env) if env else DEFAULT_TOL


# -- exponential propagation factors -----------------------------------------

def _series(z, k, terms=7):
    # sum_n (-z)^n / (n + k)!
    out = np.zeros_like(z)
    for n in reversed(range(terms)):
        out = out * (-z) + 1.0 / math.factorial(n + k)
    return out


def phi1(z):
    """(1 - exp(-z)) / z, analytic through z = 0."""
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < 1e-4
    safe = np.where(small, 1.0, z)
    return np.where(small, _series(z, 1, 5), -np.expm1(-safe) / safe)


def phi2(z):
    """(z - 1 + exp(-z)) / z**2, the spatial mean of (1 - exp(-z u))/z over u in [0, 1]."""
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < 1e-2
    safe = np.where(small, 1.0, z)
    return np.where(small, _series(z, 2), (1.0 - phi1(safe)) / safe)


def mean_abs2_profile(a):
    """Mean over u in [0, 1] of |(1 - exp(-a u)) / a|**2, for Re a >= 0."""
    a = np.asarray(a, dtype=complex)
    small = np.abs(a) < 1e-2
    safe = np.where(small, 1.0, a)
    r = safe.real
    decay = np.where(r > 1e-12, -np.expm1(-2 * np.maximum(r, 1e-12)) / (2 * np.maximum(r, 1e-12)), 1.0)
    closed = (1.0 - 2.0 * phi1(safe).real + decay) / np.abs(safe) ** 2
    if not np.any(small):
        return closed
    at = a[..., None] * _GL_T
    quad = np.sum(_GL_W * _GL_T ** 2 * np.abs(phi1(at)) ** 2, axis=-1)
    return np.where(small, quad, closed)


def mean_abs2_kernel(mu, a):
    """Mean over u in [0, 1] of |1 - mu (1 - exp(-a u)) / a|**2.

    This is the spatially averaged squared response of the collective spin to
    a delta-correlated source injected at distance u*L before the exit face.
    """
    mu = np.asarray(mu, dtype=complex)
    return (1.0 - 2.0 * (mu * phi2(a)).real + np.abs(mu) ** 2 * mean_abs2_profile(a)).real


# -- quadrature --------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __float__(self):
        return self.value


def integrate_infinite(f, tol: float | None = None, scale: float = 1.0,
                       hints=(), even: bool = False) -> QuadratureResult:
    """Integrate f over the real line and divide by 2 pi.

    The axis is mapped onto (-pi/2, pi/2) with omega = scale * tan(theta);
    ``hints`` are characteristic frequencies used as panel breakpoints.  With
    ``even=True`` only the positive half-line is sampled.
    """
    tol = default_tol() if tol is None else tol

    def g(theta):
        c = math.cos(theta)
        return f(scale * math.tan(theta)) * scale / (c * c)

    half = math.pi / 2
    pts = sorted({math.atan(abs(h) / scale) for h in hints if h and math.isfinite(h)})
    pts = [p for p in pts if 0 < p < half]
    lo = 0.0 if even else -half
    if not even:
        pts = sorted([-p for p in pts] + [0.0] + pts)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(g, lo, half, points=pts or None, limit=MAX_PANELS,
                             epsabs=0.0, epsrel=tol, full_output=1)
    value, err, info = out[0], out[1], out[2]
    factor = (2.0 if even else 1.0) / (2 * math.pi)
    value *= factor
    err *= factor
    if not math.isfinite(value) or err > max(ACCEPT_TOL * abs(value), 1e-14):
        raise QuadratureFailure(f"integral {value!r} with error {err:.3g} "
                                f"after {info['neval']} evaluations")
    return QuadratureResult(value, err, info["neval"])


# -- root finding / optimisation ---------------------------------------------

def find_root_bracketed(g, lo: float, hi: float, tol: float = 1e-9, maxiter: int = 200) -> float:
    """Bisection root of g on [lo, hi]; ``tol`` is relative to the bracket scale."""
    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if glo * ghi > 0:
        raise NoBracket(f"g({lo})={glo:.3g} and g({hi})={ghi:.3g} have the same sign")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
        if hi - lo <= tol * max(abs(lo), abs(hi), 1e-300):
            break
    return 0.5 * (lo + hi)


def first_crossing(g, start: float, limit: float):
    """Smallest doubling point x = start * 2**k <= limit where g(x) > 0, and its predecessor.

    Returns None if g stays nonpositive up to ``limit``.
    """
    prev, x = 0.0, start
    while x <= limit:
        if g(x) > 0:
            return prev, x
        prev, x = x, 2 * x
    return None


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-6):
    """Maximise a unimodal f on [lo, hi]; returns (x*, f(x*))."""
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise BoundsError(f"invalid bounds [{lo}, {hi}]")
    if hi - lo <= tol:
        x = 0.5 * (lo + hi)
        return x, f(x)
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    fx = f(x)
    # the endpoints can win for monotone objectives
    for xe in (lo, hi):
        fe = f(xe)
        if fe > fx:
            x, fx = xe, fe
    return x, fx
