"""Spherical plasma shell: radial photon propagator and Jost functions.

A shell of radius R carries the same plasma model as the flat sheet. The
l-th partial wave scatters with Jost functions

    g_l^(1)(k0) = 1 + Omega R^2 d_l(R, R)            (TE)
    g_l^(2)(k0) = 1 + (i Omega/k0) j^'_l(k0 R) h^'_l(k0 R)   (TM)

built from the radial propagator d_l and Riccati-Bessel derivatives. For
real k0 the imaginary part of g^(1) is Omega R^2 k0 j_l(k0 R)^2 >= 0, which
is the mechanism that forbids real zeros: neither polarization supports a
spherical surface plasmon, and scan_real_zeros certifies that numerically.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DegenerateMomentumError
from .numerics import (
    LMAX_DEFAULT,
    riccati_bessel,
    spherical_bessel_j,
    spherical_hankel1,
)
from .sheet import MinkowskiMomentum, gamma_minkowski

__all__ = [
    "SphericalShell",
    "JostEvaluation",
    "ZeroCandidate",
    "radial_propagator_dl",
    "jost_te",
    "jost_te_riccati",
    "jost_tm",
    "jost_tm_decomposed",
    "evaluate_jost",
    "scan_real_zeros",
    "tm_flat_limit",
]


@dataclass(frozen=True)
class SphericalShell:
    """Shell radius and plasma strength; omega = 0 is the transparent limit."""

    radius: float
    omega: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise ValueError("radius must be positive")
        if self.omega < 0.0:
            raise ValueError("omega must be non-negative")


@dataclass(frozen=True)
class JostEvaluation:
    """Both Jost functions of one partial wave at one frequency."""

    l: int
    k0: complex
    gTE: complex
    gTM: complex

    def __post_init__(self):
        if self.l < 0 or self.l != int(self.l):
            raise ValueError("l must be a non-negative integer")


def _order_bound(l):
    return max(LMAX_DEFAULT, l + 2)


def radial_propagator_dl(l, k0, r, rp):
    """Radial photon propagator d_l(r, r') = i k0 j_l(k0 r_<) h_l(k0 r_>)."""
    if l < 0:
        raise ValueError("l must be non-negative")
    if k0 == 0:
        raise DegenerateMomentumError("static limit k0 = 0 not modeled")
    if not (r > 0.0 and rp > 0.0):
        raise ValueError("radii must be positive")
    inner, outer = min(r, rp), max(r, rp)
    bound = _order_bound(l)
    return (1j * k0 * spherical_bessel_j(l, k0 * inner, bound)
            * spherical_hankel1(l, k0 * outer, bound))


def _check_jost_args(l, k0):
    if l < 1:
        raise ValueError("Jost functions need l >= 1")
    if k0 == 0:
        raise DegenerateMomentumError("static limit k0 = 0 not modeled")


def jost_te(l, k0, shell):
    """TE Jost function 1 + Omega R^2 d_l(R, R)."""
    _check_jost_args(l, k0)
    if shell.omega == 0.0:
        return complex(1.0)
    radius = shell.radius
    return 1.0 + shell.omega * radius * radius * radial_propagator_dl(
        l, k0, radius, radius)


def jost_te_riccati(l, k0, shell):
    """TE Jost function computed from Riccati-Bessel products instead of d_l."""
    _check_jost_args(l, k0)
    if shell.omega == 0.0:
        return complex(1.0)
    rj, _, rh, _ = riccati_bessel(l, k0 * shell.radius, _order_bound(l))
    return 1.0 + (1j * shell.omega / k0) * rj * rh


def jost_tm(l, k0, shell):
    """TM Jost function 1 + (i Omega/k0) j^'_l(k0 R) h^'_l(k0 R)."""
    _check_jost_args(l, k0)
    if shell.omega == 0.0:
        return complex(1.0)
    _, rjp, _, rhp = riccati_bessel(l, k0 * shell.radius, _order_bound(l))
    return 1.0 + (1j * shell.omega / k0) * rjp * rhp


def jost_tm_decomposed(l, k0, shell):
    """TM Jost function assembled from j_l and y_l separately.

    Independent route: Riccati derivatives via z f_l' = l f_l - z f_(l+1)
    (the upward identity) with h = j + i y, rather than the downward identity
    used by riccati_bessel.
    """
    _check_jost_args(l, k0)
    if shell.omega == 0.0:
        return complex(1.0)
    z = k0 * shell.radius
    bound = _order_bound(l + 1)
    j_l = spherical_bessel_j(l, z, bound)
    j_n = spherical_bessel_j(l + 1, z, bound)
    h_l = spherical_hankel1(l, z, bound)
    h_n = spherical_hankel1(l + 1, z, bound)
    y_l = (h_l - j_l) / 1j
    y_n = (h_n - j_n) / 1j
    rjp = (l + 1) * j_l - z * j_n
    ryp = (l + 1) * y_l - z * y_n
    return 1.0 + (1j * shell.omega / k0) * rjp * (rjp + 1j * ryp)


def evaluate_jost(l, k0, shell):
    """Bundle both polarizations at one (l, k0)."""
    return JostEvaluation(l=l, k0=k0, gTE=jost_te(l, k0, shell),
                          gTM=jost_tm(l, k0, shell))


def tm_flat_limit(k0, kpar, omega):
    """Large-shell TM asymptote 1 + i Omega Gamma/(2 k0^2) at fixed kpar.

    Oscillation average of jost_tm as l -> inf, R -> inf with kpar = l/R
    held fixed; proportional to the flat-sheet TM Jost structure
    1 - 2 i k0^2/(Omega Gamma), so it shares its zeros.
    """
    gamma = gamma_minkowski(MinkowskiMomentum.from_parallel(k0, kpar))
    return 1.0 + 1j * omega * gamma / (2.0 * k0 * k0)


@dataclass(frozen=True)
class ZeroCandidate:
    """A sub-threshold minimum of |g|^2 that could not be certified nonzero."""

    l: int
    polarization: str
    k0r_interval: tuple
    k0r_location: float
    min_abs_g_squared: float
    imag_part_floor: float
    noise_bound: float


# asymptotic period of the Riccati-Bessel oscillations in k0 R
_OSCILLATION_PERIOD = math.pi

_JOST_BY_POLARIZATION = {"te": jost_te, "tm": jost_tm}

# absolute uncertainty of one Jost evaluation, relative to its term sizes
_NOISE_RELATIVE = 1e-12
_CERTIFICATE_MARGIN = 10.0


def _stable_imag_floor(polarization, l, k0, shell):
    """Im g for real k0 through its cancellation-free closed form.

    Im g^(1) = Omega R^2 k0 j_l^2 and Im g^(2) = (Omega/k0) j^'_l(k0 R)^2 are
    single squared factors, so they carry relative (not absolute) rounding
    error; they vanish only where the squared factor does, and at those
    points Re g = 1. A real zero of g is therefore impossible, and a computed
    floor well above evaluation noise certifies any minimum as a finite-width
    resonance rather than a zero.
    """
    z = k0 * shell.radius
    if polarization == "te":
        j = spherical_bessel_j(l, z, _order_bound(l))
        return shell.omega * shell.radius**2 * k0 * (j * j).real
    _, rjp, _, _ = riccati_bessel(l, z, _order_bound(l))
    return (shell.omega / k0) * (rjp * rjp).real


def scan_real_zeros(l, shell, k0r_max=30.0, points_per_period=20,
                    threshold=1e-6, polarizations=("te", "tm"),
                    certify_nonzero=True):
    """Search |g_l|^2 for real-frequency zeros; an empty list certifies none.

    Samples k0 R on (0, k0r_max] finely enough to resolve every oscillation,
    sharpens each local minimum of |g|^2 by bounded minimization, and keeps
    those below threshold. At small Omega R and growing l the TM function
    develops resonance dips whose depth shrinks like a high power of k0 R;
    minima whose exact imaginary part provably exceeds evaluation noise are
    finite-width resonances, not zeros, and are dropped unless
    certify_nonzero is disabled (useful for inspecting the dips themselves).
    """
    if l < 1:
        raise ValueError("Jost functions need l >= 1")
    if k0r_max <= 0.0:
        raise ValueError("k0r_max must be positive")
    if points_per_period < 20:
        warnings.warn(
            "fewer than 20 points per oscillation period may skip over "
            "narrow minima", UserWarning, stacklevel=2)

    step = _OSCILLATION_PERIOD / points_per_period
    count = max(int(math.ceil(k0r_max / step)), 2)
    grid = np.linspace(step, k0r_max, count)
    radius = shell.radius

    found = []
    for polarization in polarizations:
        jost = _JOST_BY_POLARIZATION[polarization]

        def abs_g_squared(z, _jost=jost):
            return abs(_jost(l, z / radius, shell)) ** 2

        values = np.array([abs_g_squared(z) for z in grid])
        candidates = [i for i in range(1, len(grid) - 1)
                      if values[i] <= values[i - 1] and values[i] <= values[i + 1]]
        if values[0] < values[1]:
            candidates.append(0)
        if values[-1] < values[-2]:
            candidates.append(len(grid) - 1)

        for i in candidates:
            lo = grid[max(i - 1, 0)]
            hi = grid[min(i + 1, len(grid) - 1)]
            result = minimize_scalar(abs_g_squared, bounds=(lo, hi),
                                     method="bounded",
                                     options={"xatol": 1e-12})
            certified = min(float(result.fun), float(values[i]))
            if certified >= threshold:
                continue
            location = float(result.x)
            k0 = location / radius
            g_min = jost(l, k0, shell)
            floor = _stable_imag_floor(polarization, l, k0, shell)
            noise = _NOISE_RELATIVE * (1.0 + abs(g_min - 1.0))
            if certify_nonzero and floor > _CERTIFICATE_MARGIN * noise:
                continue
            found.append(ZeroCandidate(
                l=l, polarization=polarization,
                k0r_interval=(float(lo), float(hi)),
                k0r_location=location,
                min_abs_g_squared=certified,
                imag_part_floor=floor,
                noise_bound=noise))

    found.sort(key=lambda c: c.k0r_location)
    return found
