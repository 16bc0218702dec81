"""Quadrature, root finding and spherical Bessel machinery.

Plain numerics, no sheet physics. The quadrature and root-finding routines
wrap library kernels (Gauss-Laguerre rules, QUADPACK, Brent) behind small
contracts that fail loudly instead of returning silently inaccurate numbers.
The spherical Bessel family is written out by hand because complex arguments
are needed downstream and the stock routines only take real ones.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.laguerre import laggauss
from scipy import integrate, optimize

from .errors import BracketError, IterationLimitError, ToleranceNotMet

__all__ = [
    "QuadratureSpec",
    "integrate_exponential_weight",
    "integrate_adaptive",
    "integrate_semi_infinite",
    "find_root_bracketed",
    "spherical_bessel_j",
    "spherical_hankel1",
    "riccati_bessel",
    "LMAX_DEFAULT",
]

# Upward/downward recurrences are exercised well inside their stability range
# up to this order; callers needing more must raise the limit explicitly.
LMAX_DEFAULT = 50

_QUAD_KINDS = ("exponential-weight", "adaptive-finite", "semi-infinite-transformed")


@dataclass(frozen=True)
class QuadratureSpec:
    """Method selector and tolerance budget for the integration helpers.

    Parameters
    ----------
    kind : str
        One of ``exponential-weight``, ``adaptive-finite``,
        ``semi-infinite-transformed``.
    order : int
        Starting Gauss-Laguerre order, or subdivision budget scale for the
        adaptive routines. At least 2.
    rtol : float
        Relative tolerance, in (0, 1e-3]. Defaults to 1e-8.
    abs_floor : float
        Absolute tolerance floor protecting near-zero results.
    """

    kind: str = "adaptive-finite"
    order: int = 32
    rtol: float = 1e-8
    abs_floor: float = 1e-300

    def __post_init__(self):
        if self.kind not in _QUAD_KINDS:
            raise ValueError(f"unknown quadrature kind {self.kind!r}")
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if not 0.0 < self.rtol <= 1e-3:
            raise ValueError("rtol must be in (0, 1e-3]")
        if self.abs_floor < 0.0:
            raise ValueError("abs_floor must be nonnegative")


def _laguerre_rule(order, _cache={}):
    if order not in _cache:
        _cache[order] = laggauss(order)
    return _cache[order]


# numpy's laggauss produces NaN weights above order 128; stop doubling there.
_GL_MAX_ORDER = 128


def integrate_exponential_weight(f, spec=None):
    """Integral of e^(-k) f(k) over k in [0, inf).

    Gauss-Laguerre quadrature with order doubling until two successive orders
    agree to the requested tolerance. Integrands with structure the rule
    cannot see (poles just left of the origin, fractional powers of k) make
    the doubling stall; in that case the semi-infinite adaptive route is used
    before giving up.

    Parameters
    ----------
    f : callable
        Smooth factor multiplying the e^(-k) weight.
    spec : QuadratureSpec, optional
        Tolerances and starting order.

    Returns
    -------
    float
    """
    if spec is None:
        spec = QuadratureSpec(kind="exponential-weight")
    order = max(spec.order, 2)
    nodes, weights = _laguerre_rule(order)
    prev = float(np.dot(weights, [f(x) for x in nodes]))
    while order < _GL_MAX_ORDER:
        order *= 2
        nodes, weights = _laguerre_rule(order)
        cur = float(np.dot(weights, [f(x) for x in nodes]))
        if abs(cur - prev) <= spec.rtol * abs(cur) + spec.abs_floor:
            return cur
        prev = cur
    # Doubling stalled: hand the explicitly weighted integrand to QUADPACK.
    fallback = QuadratureSpec(kind="semi-infinite-transformed",
                              order=spec.order, rtol=spec.rtol,
                              abs_floor=spec.abs_floor)
    try:
        return integrate_semi_infinite(lambda k: math.exp(-k) * f(k) if k < 700.0 else 0.0,
                                       fallback)
    except ToleranceNotMet as err:
        raise ToleranceNotMet(
            "Gauss-Laguerre doubling and adaptive fallback both failed",
            estimate=err.estimate, error_bound=err.error_bound) from err


def integrate_adaptive(f, lo, hi, spec=None, full_result=False):
    """Adaptive integral of f over the finite interval [lo, hi].

    Parameters
    ----------
    f : callable
    lo, hi : float
        Finite bounds with lo < hi.
    spec : QuadratureSpec, optional
    full_result : bool
        When true, return (value, error_bound, subdivisions) instead of the
        bare value.

    Returns
    -------
    float, or (float, float, int)
    """
    if spec is None:
        spec = QuadratureSpec(kind="adaptive-finite")
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise ValueError(f"invalid interval [{lo}, {hi}]")
    limit = max(50, 4 * spec.order)
    out = integrate.quad(f, lo, hi, epsabs=spec.abs_floor, epsrel=spec.rtol,
                         limit=limit, full_output=1)
    value, abserr, info = out[0], out[1], out[2]
    if len(out) > 3:
        raise ToleranceNotMet(
            f"adaptive quadrature failed on [{lo}, {hi}]: {out[3]}",
            estimate=value, error_bound=abserr)
    if full_result:
        return value, abserr, info["last"]
    return value


def integrate_semi_infinite(f, spec=None, scale=1.0):
    """Adaptive integral of f over [0, inf) via the map k = scale t/(1-t).

    The integrand must decay fast enough that f(k)/(1-t)^2 stays bounded;
    exponential tails qualify. ``scale`` should match the decay length so the
    transformed integrand is well resolved.
    """
    if spec is None:
        spec = QuadratureSpec(kind="semi-infinite-transformed")
    if scale <= 0.0:
        raise ValueError("scale must be positive")

    def transformed(t):
        if t >= 1.0:
            return 0.0
        u = 1.0 - t
        fk = f(scale * t / u)
        if fk == 0.0:
            return 0.0
        return fk * scale / (u * u)

    return integrate_adaptive(transformed, 0.0, 1.0, spec)


def find_root_bracketed(f, lo, hi, tol=1e-12, maxiter=200):
    """Root of f inside [lo, hi], bisection-safeguarded superlinear iteration.

    Parameters
    ----------
    f : callable
        Continuous on the bracket with a sign change across it.
    lo, hi : float
    tol : float
        Residual contract: |f(root)| <= tol * max(|f(lo)|, |f(hi)|).

    Returns
    -------
    float
    """
    if lo >= hi:
        raise ValueError(f"invalid bracket [{lo}, {hi}]")
    flo, fhi = f(lo), f(hi)
    scale = max(abs(flo), abs(fhi))
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change over [{lo}, {hi}]")
    root, info = optimize.brentq(f, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps,
                                 maxiter=maxiter, full_output=True, disp=False)
    if not info.converged:
        raise IterationLimitError(f"no convergence in {maxiter} iterations")
    if abs(f(root)) > tol * scale:
        raise IterationLimitError(
            f"residual {abs(f(root)):.3e} above {tol:.1e} * bracket scale {scale:.3e}")
    return float(root)


def _check_l(l, l_max):
    if not isinstance(l, (int, np.integer)):
        raise ValueError("l must be an integer")
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l > l_max:
        raise ValueError(f"l={l} exceeds the recurrence stability limit {l_max}")


def _sph_j_pair(l, z):
    """(j_{l-1}(z), j_l(z)) by downward Miller recurrence, complex z."""
    if z == 0:
        raise ValueError("z=0 must be special-cased by the caller")
    # Seed far above l, recurse down, then normalize against the closed-form
    # j_0 (or j_1 near zeros of sin z). Downward is the stable direction for j.
    start = l + 20 + int(1.2 * abs(z))
    jp = 0.0 + 0.0j
    jc = 1e-30 + 0.0j
    saved = {}
    for n in range(start, 0, -1):
        if n - 1 == l or n - 1 == l - 1 or n - 1 <= 1:
            saved[n - 1] = None  # placeholder so we know which to record
        jm = (2 * n + 1) / z * jc - jp
        jp, jc = jc, jm
        if n - 1 in saved:
            saved[n - 1] = jc
        if abs(jc.real) > 1e250 or abs(jc.imag) > 1e250:
            jp *= 1e-250
            jc *= 1e-250
            for key, val in saved.items():
                if val is not None:
                    saved[key] = val * 1e-250
    j0_exact = cmath.sin(z) / z
    j1_exact = cmath.sin(z) / z**2 - cmath.cos(z) / z
    j0_trial = saved.get(0)
    j1_trial = saved.get(1, j0_trial)
    if abs(j0_trial) >= abs(j1_trial):
        factor = j0_exact / j0_trial
    else:
        factor = j1_exact / j1_trial
    if l == 0:
        return cmath.cos(z) / z, j0_exact
    jl = saved[l] * factor
    jlm1 = j0_exact if l == 1 else saved[l - 1] * factor
    return jlm1, jl


def _sph_h_pair(l, z):
    """(h1_{l-1}(z), h1_l(z)) by upward recurrence from closed seeds."""
    hm = cmath.exp(1j * z) / z          # order -1
    hc = -1j * cmath.exp(1j * z) / z    # order 0
    if l == 0:
        return hm, hc
    for n in range(0, l):
        hm, hc = hc, (2 * n + 1) / z * hc - hm
    return hm, hc


def spherical_bessel_j(l, z, l_max=LMAX_DEFAULT):
    """Spherical Bessel function j_l(z) for real or complex z.

    Real input gives a real result. z=0 is the regular point j_l(0) = [l == 0].
    """
    _check_l(l, l_max)
    if z == 0:
        return 1.0 if l == 0 else 0.0
    zc = complex(z)
    _, jl = _sph_j_pair(l, zc)
    if isinstance(z, complex):
        return jl
    return jl.real


def spherical_hankel1(l, z, l_max=LMAX_DEFAULT):
    """Spherical Hankel function of the first kind, h_l(z) = j_l(z) + i y_l(z).

    Always complex; z must be nonzero (irregular point).
    """
    _check_l(l, l_max)
    if z == 0:
        raise ValueError("spherical Hankel function is singular at z=0")
    _, hl = _sph_h_pair(l, complex(z))
    return hl


def riccati_bessel(l, z, l_max=LMAX_DEFAULT):
    """Riccati-Bessel pair (z j_l, z h_l) and their derivatives.

    Returns
    -------
    (rj, rjp, rh, rhp) : tuple of complex
        rj = z j_l(z), rjp = d/dz [z j_l(z)], same for the Hankel pair.
        These satisfy the Wronskian identity rj * rhp - rjp * rh = i.
    """
    _check_l(l, l_max)
    if z == 0:
        raise ValueError("Riccati-Bessel functions need z != 0")
    zc = complex(z)
    jm, jl = _sph_j_pair(l, zc)
    hm, hl = _sph_h_pair(l, zc)
    rj = zc * jl
    rjp = zc * jm - l * jl
    rh = zc * hl
    rhp = zc * hm - l * hl
    return rj, rjp, rh, rhp
