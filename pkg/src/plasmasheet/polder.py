"""Charge-sheet and atom-sheet (Casimir-Polder) interaction energies.

A charge or neutral atom sits a distance a in front of a single plasma sheet.
Every energy here reduces to an ideal-conductor value times a dimensionless
shape function of x = Omega a: the f-family controls the quadratic-field
single-vertex shift, the h-family the no-recoil charge interaction, and the
g-family the Casimir-Polder energy. All shape functions tend to 1 as
x -> infinity and die off (h excepted, it diverges) as x -> 0.

Units: hbar = c = 1, Heaviside-Lorentz (Coulomb potential e^2/(4 pi r)).
"""

import math
from dataclasses import dataclass

from .errors import PathDisagreementError
from .numerics import (
    QuadratureSpec,
    integrate_adaptive,
    integrate_exponential_weight,
    integrate_semi_infinite,
)

__all__ = [
    "AtomProperties",
    "ReductionFunctions",
    "IDEAL_SHEET_CP_COEFFICIENT",
    "BULK_CONDUCTOR_CP_COEFFICIENT",
    "image_potential",
    "electrostatic_shift",
    "f_te",
    "f_tm",
    "h_parallel",
    "h_3",
    "g_te",
    "g_tm",
    "g_3",
    "delta1",
    "delta1_integral_form",
    "charge_sheet_energy",
    "casimir_polder_energy",
    "reduction_functions",
]

# Isotropic-polarizability coefficient of -alpha/(32 pi^2 a^4) for an
# infinitely thin ideal sheet, and the reference value for a conductor
# with bulk behind the surface.
IDEAL_SHEET_CP_COEFFICIENT = 13.0 / 5.0
BULK_CONDUCTOR_CP_COEFFICIENT = 3.0

# Dual-route evaluations must agree this well or the computation aborts.
PATH_AGREEMENT_TOL = 1e-8

# Route comparisons are integrated tighter than the user-facing default so
# the agreement contract has headroom over pure quadrature noise.
_INTERNAL_RTOL = 1e-10


@dataclass(frozen=True)
class AtomProperties:
    """Coupling, mass and static moments of the particle in front of the sheet.

    e and m need not match the sheet's own charge carriers. alpha1..alpha3
    are static polarizabilities along the coordinate axes (3 = normal to the
    sheet), p2par and p23 are <p_par^2> and <p_3^2>, quadrupole is Q.
    """

    e: float = 1.0
    m: float = 1.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    alpha3: float = 0.0
    p2par: float = 0.0
    p23: float = 0.0
    quadrupole: float = 0.0

    def __post_init__(self):
        if not self.m > 0.0:
            raise ValueError("mass must be positive")
        if min(self.alpha1, self.alpha2, self.alpha3) < 0.0:
            raise ValueError("polarizabilities must be non-negative")
        if self.p2par < 0.0 or self.p23 < 0.0:
            raise ValueError("squared momenta must be non-negative")

    @classmethod
    def isotropic(cls, alpha, **kwargs):
        """Atom with alpha1 = alpha2 = alpha3 = alpha."""
        return cls(alpha1=alpha, alpha2=alpha, alpha3=alpha, **kwargs)


@dataclass(frozen=True)
class ReductionFunctions:
    """All shape functions of one sheet at a common x = Omega a."""

    x: float
    fTE: float
    fTM: float
    hPar: float
    h3: float
    gTE: float
    gTM: float
    g3: float

    def __post_init__(self):
        if not self.x > 0.0:
            raise ValueError("x must be positive")
        for name in ("fTE", "fTM", "hPar", "h3", "gTE", "gTM", "g3"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError("%s must be positive and finite" % name)


def _require_positive(x, name="x"):
    if not x > 0.0:
        raise ValueError("%s must be positive" % name)


def image_potential(x1, x2, x3, a, e):
    """Mirror-charge Coulomb potential e^2/(4 pi |r - r_mirror|).

    The sheet lies in the plane at height a; a unit source at the origin sees
    the potential of a mirror charge at (0, 0, 2a), for any sheet strength.
    """
    distance = math.sqrt(x1 * x1 + x2 * x2 + (x3 - 2.0 * a) ** 2)
    if distance == 0.0:
        raise ValueError("observation point coincides with the mirror charge")
    return e * e / (4.0 * math.pi * distance)


def electrostatic_shift(a, atom):
    """Static multipole interaction with the sheet, through quadrupole order."""
    _require_positive(a, "a")
    return (atom.e**2 / (4.0 * math.pi)) * (
        1.0 / (2.0 * a) + atom.quadrupole / (16.0 * a**3))


# ---------------------------------------------------------------------------
# Shape-function kernels. The angular variable enters through b = k/x; the
# arctan combinations cancel badly for small b, so each one switches to its
# alternating series there (converges for b < 1, used for b < 0.5).


def _atan_ratio(b):
    """arctan(sqrt(b))/sqrt(b) for b > 0."""
    rb = math.sqrt(b)
    return math.atan(rb) / rb


def _alternating_series(coeff, b):
    total = 0.0
    sign = 1.0
    bpow = 1.0
    for m in range(400):
        term = sign * coeff(m) * bpow
        total += term
        if m > 2 and abs(term) <= 1e-17 * abs(total):
            return total
        sign = -sign
        bpow *= b
    raise ArithmeticError("series for b=%g did not converge" % b)


def _one_minus_atan_ratio(b):
    """1 - arctan(sqrt(b))/sqrt(b), stable down to b = 0."""
    if b >= 0.5:
        return 1.0 - _atan_ratio(b)
    return b * _alternating_series(lambda m: 1.0 / (2 * m + 3), b)


def _tm_angular(b):
    """Int_0^1 deps (eps^4 + (1-eps^2)^2)/(1 + eps^2 b); equals 11/15 at b=0."""
    if b >= 0.5:
        return (2.0 / (3.0 * b) - 2.0 * (1.0 + b) / (b * b)
                + ((b * b + 2.0 * b + 2.0) / (b * b)) * _atan_ratio(b))
    return _alternating_series(
        lambda m: 2.0 / (2 * m + 5) - 2.0 / (2 * m + 3) + 1.0 / (2 * m + 1), b)


def _transverse_angular(b):
    """Int_0^1 deps (1 - eps^2)/(1 + eps^2 b); equals 2/3 at b=0."""
    if b >= 0.5:
        return -1.0 / b + ((1.0 + b) / b) * _atan_ratio(b)
    return _alternating_series(
        lambda m: 1.0 / (2 * m + 1) - 1.0 / (2 * m + 3), b)


def _weight_spec(rtol):
    return QuadratureSpec(kind="exponential-weight", rtol=rtol)


def f_te(x, rtol=1e-8):
    """TE reduction of the single-vertex shift; -> 1 as x -> inf, ~ x at 0."""
    _require_positive(x)
    return integrate_exponential_weight(
        lambda k: k / (1.0 + k / x), _weight_spec(rtol))


def f_tm(x, rtol=1e-8):
    """TM reduction of the single-vertex shift; -> 1 as x -> inf, ~ 3x at 0."""
    _require_positive(x)
    return 3.0 * x * integrate_exponential_weight(
        lambda k: _one_minus_atan_ratio(k / x), _weight_spec(rtol))


def h_parallel(x, rtol=1e-8):
    """In-plane kinetic shape of the charge interaction; decreases to 1."""
    _require_positive(x)
    return integrate_exponential_weight(
        lambda k: -1.0 / (1.0 + k / x) + 0.5 * k + 1.5 + k / x,
        _weight_spec(rtol))


def h_3(x):
    """Normal kinetic shape of the charge interaction, exactly 1 + 1/x."""
    _require_positive(x)
    return 1.0 + 1.0 / x


def _require_agreement(label, first, second):
    scale = max(abs(first), abs(second))
    if scale == 0.0:
        return
    gap = abs(first - second) / scale
    if gap > PATH_AGREEMENT_TOL:
        raise PathDisagreementError(
            "%s routes disagree: %.17g vs %.17g (rel %.3e)"
            % (label, first, second, gap))


def g_te(x, rtol=1e-8):
    """TE Casimir-Polder reduction, (1/6) Int k^3 e^-k/(1 + k/x)."""
    _require_positive(x)
    return integrate_exponential_weight(
        lambda k: k**3 / (1.0 + k / x), _weight_spec(rtol)) / 6.0


def _dual_angular_reduction(x, prefactor, angular_closed, angular_poly, label):
    """Outer k-integral of k^3 times an angular factor, evaluated twice:
    once with the closed angular form, once re-integrating over eps."""
    closed = prefactor * integrate_exponential_weight(
        lambda k: k**3 * angular_closed(k / x), _weight_spec(_INTERNAL_RTOL))

    inner_spec = QuadratureSpec(kind="adaptive-finite", rtol=0.1 * _INTERNAL_RTOL)

    def angular_by_quadrature(k):
        b = k / x
        return integrate_adaptive(
            lambda eps: angular_poly(eps) / (1.0 + eps * eps * b),
            0.0, 1.0, inner_spec)

    double = prefactor * integrate_exponential_weight(
        lambda k: k**3 * angular_by_quadrature(k),
        _weight_spec(_INTERNAL_RTOL))

    _require_agreement(label, closed, double)
    return closed, double


def g_tm(x, rtol=1e-8):
    """TM Casimir-Polder reduction; both evaluation routes must agree."""
    _require_positive(x)
    closed, _ = _dual_angular_reduction(
        x, 5.0 / 22.0, _tm_angular,
        lambda eps: eps**4 + (1.0 - eps * eps) ** 2, "g_tm")
    return closed


def g_3(x, rtol=1e-8):
    """Normal-polarizability Casimir-Polder reduction; dual-route checked."""
    _require_positive(x)
    closed, _ = _dual_angular_reduction(
        x, 0.25, _transverse_angular,
        lambda eps: 1.0 - eps * eps, "g_3")
    return closed


def reduction_functions(x, rtol=1e-8):
    """Evaluate every shape function once at a common x."""
    return ReductionFunctions(
        x=x,
        fTE=f_te(x, rtol),
        fTM=f_tm(x, rtol),
        hPar=h_parallel(x, rtol),
        h3=h_3(x),
        gTE=g_te(x, rtol),
        gTM=g_tm(x, rtol),
        g3=g_3(x, rtol),
    )


# ---------------------------------------------------------------------------
# Energies.


def delta1(a, sheet, atom, rtol=1e-8):
    """Single-vertex quadratic-field shift, closed shape-function form."""
    _require_positive(a, "a")
    if sheet.omega == 0.0:
        return 0.0
    x = sheet.omega * a
    prefactor = -atom.e**2 / (32.0 * math.pi**2 * atom.m * a * a)
    return prefactor * (f_te(x, rtol) + f_tm(x, rtol) / 3.0)


def delta1_integral_form(a, sheet, atom, rtol=1e-8):
    """Single-vertex shift straight from the Euclidean momentum integral.

    Independent route: the coincidence-limit propagator trace
    -(e^2/2m) Int d^3k/(2 pi)^3 (e^(-2 gamma a)/2 gamma)
    (r~_1 + r~_2 k4^2/gamma^2) in spherical coordinates, with the angular
    integral done numerically instead of through the arctan reductions.
    """
    _require_positive(a, "a")
    if sheet.omega == 0.0:
        return 0.0
    omega = sheet.omega
    outer_spec = QuadratureSpec(kind="semi-infinite-transformed", rtol=rtol)
    inner_spec = QuadratureSpec(kind="adaptive-finite", rtol=0.1 * rtol)

    def radial(g):
        damp = math.exp(-2.0 * g * a)
        if damp == 0.0 or g == 0.0:
            return 0.0

        def angular(eps):
            te = 1.0 / (1.0 + 2.0 * g / omega)
            tm = 1.0 / (1.0 + 2.0 * g * eps * eps / omega)
            return te + eps * eps * tm

        return 0.5 * g * damp * integrate_adaptive(angular, 0.0, 1.0, inner_spec)

    radial_integral = integrate_semi_infinite(radial, outer_spec,
                                              scale=0.5 / a)
    return -(atom.e**2 / (4.0 * math.pi**2 * atom.m)) * radial_integral


def charge_sheet_energy(a, sheet, atom, rtol=1e-8):
    """No-recoil energy of a single charge, as (electrostatic, kinetic).

    The electrostatic part -e^2/(8 pi a) is exact and sheet-independent. The
    kinetic part integrates the explicit surface-mode pole contribution; its
    momentum integral is evaluated in the rescaled variable q = 2 k a, which
    makes the e^-q decay weight explicit. In shape-function terms it equals
    -(e^2/(16 pi m^2 a)) [h_par(x) <p_par^2>/2 + (1 + 1/(2x)) <p_3^2>].
    """
    _require_positive(a, "a")
    if not sheet.omega > 0.0:
        raise ValueError("kinetic part diverges for a transparent sheet")
    x = sheet.omega * a

    def braces(q):
        par = (1.0 / (1.0 + q / x) - (0.5 * q + 1.5 + q / x)) * 0.5 * atom.p2par
        perp = (0.5 * q + 0.5 + 0.5 * q / x) * atom.p23
        return par - perp

    integral = integrate_exponential_weight(braces, _weight_spec(rtol))
    kinetic = (atom.e**2 / (16.0 * math.pi * atom.m**2 * a)) * integral
    electrostatic = -atom.e**2 / (8.0 * math.pi * a)
    return electrostatic, kinetic


def casimir_polder_energy(a, sheet, atom, rtol=1e-8):
    """Atom-sheet dispersion energy

    -(1/(32 pi^2 a^4)) { (g_TE + (11/5) g_TM) (alpha1+alpha2)/4 + g_3 alpha3 }.
    """
    _require_positive(a, "a")
    if sheet.omega == 0.0:
        return 0.0
    x = sheet.omega * a
    alpha_par = atom.alpha1 + atom.alpha2
    braces = 0.0
    if alpha_par != 0.0:
        braces += (g_te(x, rtol) + 2.2 * g_tm(x, rtol)) * alpha_par / 4.0
    if atom.alpha3 != 0.0:
        braces += g_3(x, rtol) * atom.alpha3
    return -braces / (32.0 * math.pi**2 * a**4)
