"""Two-sheet Casimir energy and pressure.

The energy per unit area of two parallel sheets at distance a is an
imaginary-frequency (Lifshitz-type) mode sum

    E/A = (1/4 pi^2) Int_0^inf dk4 Int_0^inf dkpar kpar
          sum_s ln(1 - r~_s^2 e^(-2 gamma a)),

with r~_s the Euclidean reflection coefficients. In polar coordinates
(g = gamma a, eps = k4/gamma) the double integral collapses to a function of
the single combination x = Omega a, so a^3 E/A = F(x) exactly. The ideal
conductor limit F(inf) = -pi^2/720 fixes the normalization.
"""

import math
from dataclasses import dataclass

from .numerics import QuadratureSpec, integrate_adaptive, integrate_semi_infinite

__all__ = [
    "CasimirResult",
    "reduced_energy_parts",
    "lifshitz_energy_per_area",
    "lifshitz_pressure",
    "casimir_result",
    "polarization_convention_equivalence",
    "IDEAL_REDUCED_ENERGY",
    "IDEAL_REDUCED_PRESSURE",
]

# a^3 E/A and a^4 P of the ideal conductor pair.
IDEAL_REDUCED_ENERGY = -math.pi**2 / 720.0
IDEAL_REDUCED_PRESSURE = -math.pi**2 / 240.0


def _te_euclidean(g, x):
    return 1.0 / (1.0 + 2.0 * g / x)


def _tm_euclidean(g, eps, x):
    return 1.0 / (1.0 + 2.0 * g * eps * eps / x)


def reduced_energy_parts(x, rtol=1e-8, te_coeff=_te_euclidean, tm_coeff=_tm_euclidean):
    """Dimensionless TE and TM parts of a^3 E/A at x = Omega a.

    Parameters
    ----------
    x : float
        Omega times distance, positive.
    rtol : float
        Relative tolerance handed to the quadrature.
    te_coeff, tm_coeff : callable
        Euclidean reflection coefficients as functions of (g[, eps], x);
        swappable so algebraically equivalent conventions can be compared.

    Returns
    -------
    (te, tm) : tuple of float
        Both negative; their sum is a^3 E/A.
    """
    if x <= 0.0:
        raise ValueError("x = Omega * a must be positive")
    outer_spec = QuadratureSpec(kind="semi-infinite-transformed", rtol=rtol)
    inner_spec = QuadratureSpec(kind="adaptive-finite", rtol=0.1 * rtol)

    def te_integrand(g):
        if g == 0.0:
            return 0.0  # g^2 ln(c g) -> 0
        w = te_coeff(g, x) ** 2 * math.exp(-2.0 * g)
        if w == 0.0:
            return 0.0
        return g * g * math.log1p(-w)

    def tm_integrand(g):
        if g == 0.0:
            return 0.0
        damp = math.exp(-2.0 * g)
        if damp == 0.0:
            return 0.0

        def angular(eps):
            return math.log1p(-tm_coeff(g, eps, x) ** 2 * damp)

        return g * g * integrate_adaptive(angular, 0.0, 1.0, inner_spec)

    norm = 1.0 / (4.0 * math.pi**2)
    te = norm * integrate_semi_infinite(te_integrand, outer_spec)
    tm = norm * integrate_semi_infinite(tm_integrand, outer_spec)
    return te, tm


def lifshitz_energy_per_area(a, sheet, rtol=1e-8):
    """Casimir energy per unit area of two sheets a apart (negative)."""
    if a <= 0.0:
        raise ValueError("distance must be positive")
    if sheet.omega == 0.0:
        return 0.0
    te, tm = reduced_energy_parts(sheet.omega * a, rtol)
    return (te + tm) / a**3


def lifshitz_pressure(a, sheet, rtol=1e-8, step_fraction=1e-3):
    """Casimir pressure -dE/da by a five-point central difference.

    The stencil step is a * step_fraction; the energy scaling law keeps every
    stencil point on the same reduced curve, so the derivative is smooth.
    """
    if a <= 0.0:
        raise ValueError("distance must be positive")
    if sheet.omega == 0.0:
        return 0.0
    h = a * step_fraction
    em2 = lifshitz_energy_per_area(a - 2 * h, sheet, rtol)
    em1 = lifshitz_energy_per_area(a - h, sheet, rtol)
    ep1 = lifshitz_energy_per_area(a + h, sheet, rtol)
    ep2 = lifshitz_energy_per_area(a + 2 * h, sheet, rtol)
    dEda = (-ep2 + 8.0 * ep1 - 8.0 * em1 + em2) / (12.0 * h)
    return -dEda


@dataclass(frozen=True)
class CasimirResult:
    """Energy, pressure and polarization split for a two-sheet configuration."""

    distance: float
    omega: float
    energy_per_area: float
    pressure: float
    te_share: float
    tm_share: float

    def __post_init__(self):
        if self.omega > 0.0:
            if not self.energy_per_area < 0.0:
                raise ValueError("attractive configuration must have E < 0")
            if not self.pressure < 0.0:
                raise ValueError("attractive configuration must have P < 0")
            if not math.isclose(self.te_share + self.tm_share, 1.0,
                                rel_tol=0.0, abs_tol=1e-9):
                raise ValueError("pol shares must sum to 1")


def casimir_result(a, sheet, rtol=1e-8):
    """Bundle energy, pressure and TE/TM shares at distance a."""
    if a <= 0.0:
        raise ValueError("distance must be positive")
    if sheet.omega == 0.0:
        return CasimirResult(distance=a, omega=0.0, energy_per_area=0.0,
                             pressure=0.0, te_share=0.0, tm_share=1.0)
    te, tm = reduced_energy_parts(sheet.omega * a, rtol)
    total = te + tm
    return CasimirResult(
        distance=a,
        omega=sheet.omega,
        energy_per_area=total / a**3,
        pressure=lifshitz_pressure(a, sheet, rtol),
        te_share=te / total,
        tm_share=tm / total,
    )


def polarization_convention_equivalence(a, sheet, rtol=1e-8):
    """Relative energy difference between the two TM matching conventions.

    The sheet current-current form 1/(1 + 2 k4^2/(Omega gamma)) and the
    derivative-of-delta form Omega gamma/(Omega gamma + 2 k4^2) are the same
    rational function written differently; the energies they produce must
    agree to rounding. Returns |E_alt - E|/|E|.
    """
    if a <= 0.0:
        raise ValueError("distance must be positive")
    if sheet.omega == 0.0:
        return 0.0
    x = sheet.omega * a

    def te_alt(g, x_):
        return x_ / (x_ + 2.0 * g)

    def tm_alt(g, eps, x_):
        og = x_ * g
        return og / (og + 2.0 * g * g * eps * eps)

    te, tm = reduced_energy_parts(x, rtol)
    te2, tm2 = reduced_energy_parts(x, rtol, te_coeff=te_alt, tm_coeff=tm_alt)
    base = te + tm
    return abs((te2 + tm2) - base) / abs(base)
