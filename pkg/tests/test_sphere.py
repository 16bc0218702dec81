import cmath
import math

import numpy as np
import pytest
from scipy import special

from plasmasheet.errors import DegenerateMomentumError
from plasmasheet.sphere import (
    JostEvaluation,
    SphericalShell,
    ZeroCandidate,
    _stable_imag_floor,
    evaluate_jost,
    jost_te,
    jost_te_riccati,
    jost_tm,
    jost_tm_decomposed,
    radial_propagator_dl,
    scan_real_zeros,
    tm_flat_limit,
)


def tm_l1_trig(k0, radius, omega):
    # l = 1 Riccati derivatives in elementary functions
    z = k0 * radius
    rjp = math.cos(z) / z - math.sin(z) / z**2 + math.sin(z)
    rhp = cmath.exp(1j * z) * (-1j + 1.0 / z + 1j / z**2)
    return 1.0 + (1j * omega / k0) * rjp * rhp


class TestSphericalShell:
    def test_rejects_bad_geometry(self):
        with pytest.raises(ValueError):
            SphericalShell(radius=0.0, omega=1.0)
        with pytest.raises(ValueError):
            SphericalShell(radius=-2.0, omega=1.0)
        with pytest.raises(ValueError):
            SphericalShell(radius=1.0, omega=-0.5)

    def test_transparent_shell_is_allowed(self):
        shell = SphericalShell(radius=1.0, omega=0.0)
        assert shell.omega == 0.0


class TestRadialPropagator:
    def test_monopole_closed_form(self):
        # i k0 j_0 h_0 = k0 sin(z) e^{iz} / z^2 at coincident radii
        k0, r = 1.3, 2.1
        z = k0 * r
        expected = k0 * math.sin(z) * cmath.exp(1j * z) / z**2
        value = radial_propagator_dl(0, k0, r, r)
        assert abs(value - expected) <= 1e-12 * abs(expected)

    def test_symmetric_in_radii(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            l = int(rng.integers(0, 7))
            k0 = float(rng.uniform(0.2, 6.0))
            r = float(rng.uniform(0.1, 5.0))
            rp = float(rng.uniform(0.1, 5.0))
            a = radial_propagator_dl(l, k0, r, rp)
            b = radial_propagator_dl(l, k0, rp, r)
            assert a == b

    def test_imaginary_part_is_k0_j_squared(self):
        # coincident-radius imaginary part carries the free mode density
        for l in range(6):
            for k0, r in [(0.7, 1.9), (2.3, 0.8), (5.0, 3.3)]:
                value = radial_propagator_dl(l, k0, r, r)
                expected = k0 * special.spherical_jn(l, k0 * r) ** 2
                assert value.imag == pytest.approx(expected, rel=1e-9)

    def test_static_limit_rejected(self):
        with pytest.raises(DegenerateMomentumError):
            radial_propagator_dl(2, 0.0, 1.0, 1.0)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            radial_propagator_dl(-1, 1.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            radial_propagator_dl(1, 1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            radial_propagator_dl(1, 1.0, 1.0, -2.0)


class TestJostTE:
    def test_transparent_shell_gives_exactly_one(self):
        shell = SphericalShell(radius=2.0, omega=0.0)
        g = jost_te(3, 1.7, shell)
        assert g == 1.0
        assert g.imag == 0.0

    def test_propagator_and_riccati_routes_agree(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            l = int(rng.integers(1, 9))
            z = float(rng.uniform(0.1, 30.0))
            omega = float(10.0 ** rng.uniform(-2.0, 1.7))
            shell = SphericalShell(radius=1.0, omega=omega)
            a = jost_te(l, z, shell)
            b = jost_te_riccati(l, z, shell)
            assert abs(a - b) <= 1e-10 * abs(b)

    def test_imaginary_part_identity_oscillatory_regime(self):
        # Im g = Omega R^2 k0 j_l(k0 R)^2; direct evaluation keeps full
        # relative accuracy once k0 R is past the first turning point
        shell = SphericalShell(radius=1.4, omega=3.0)
        for l in range(1, 7):
            for z in (l + 1.0, l + 2.5, 2.0 * l + 4.0, 25.0):
                k0 = z / shell.radius
                g = jost_te(l, k0, shell)
                expected = (shell.omega * shell.radius**2 * k0
                            * special.spherical_jn(l, z) ** 2)
                assert g.imag == pytest.approx(expected, rel=1e-10)

    def test_imaginary_part_is_positive(self):
        shell = SphericalShell(radius=1.0, omega=2.0)
        rng = np.random.default_rng(23)
        for _ in range(40):
            l = int(rng.integers(1, 8))
            k0 = float(rng.uniform(0.05, 25.0))
            assert jost_te(l, k0, shell).imag > 0.0

    def test_magnitude_dips_below_one(self):
        # the modulus is not bounded below by 1; only the sign of the
        # imaginary part is a robust invariant
        shell = SphericalShell(radius=1.0, omega=1.0)
        grid = np.linspace(0.05, 30.0, 4000)
        smallest = min(abs(jost_te(1, float(z), shell)) for z in grid)
        assert smallest < 1.0
        assert smallest > 0.5

    def test_rejects_monopole_and_static(self):
        shell = SphericalShell(radius=1.0, omega=1.0)
        with pytest.raises(ValueError):
            jost_te(0, 1.0, shell)
        with pytest.raises(DegenerateMomentumError):
            jost_te(1, 0.0, shell)


class TestJostTM:
    def test_transparent_shell_gives_exactly_one(self):
        shell = SphericalShell(radius=2.0, omega=0.0)
        assert jost_tm(3, 1.7, shell) == 1.0

    def test_dipole_matches_trigonometric_form(self):
        for k0, radius, omega in [(1.7, 1.3, 2.5), (0.4, 3.0, 10.0),
                                  (6.0, 0.7, 0.3)]:
            shell = SphericalShell(radius=radius, omega=omega)
            g = jost_tm(1, k0, shell)
            expected = tm_l1_trig(k0, radius, omega)
            assert abs(g - expected) <= 1e-12 * abs(expected)

    def test_downward_and_upward_routes_agree(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            l = int(rng.integers(1, 9))
            z = float(rng.uniform(0.1, 30.0))
            omega = float(10.0 ** rng.uniform(-2.0, 1.7))
            shell = SphericalShell(radius=1.0, omega=omega)
            a = jost_tm(l, z, shell)
            b = jost_tm_decomposed(l, z, shell)
            assert abs(a - b) <= 1e-10 * abs(b)

    def test_imaginary_part_identity_oscillatory_regime(self):
        # Im g = (Omega/k0) [z j_l(z)]'^2 evaluated where no cancellation
        # between the j and y parts of the Hankel factor occurs
        shell = SphericalShell(radius=1.4, omega=3.0)
        for l in range(1, 7):
            for z in (l + 1.0, l + 2.5, 2.0 * l + 4.0, 25.0):
                k0 = z / shell.radius
                g = jost_tm(l, k0, shell)
                rjp = (special.spherical_jn(l, z)
                       + z * special.spherical_jn(l, z, derivative=True))
                expected = (shell.omega / k0) * rjp**2
                assert g.imag == pytest.approx(expected, rel=1e-10)

    def test_weak_coupling_transparency(self):
        # far from resonances the shell is nearly invisible:
        # |g - 1| <= O(Omega R / k0 R)
        shell = SphericalShell(radius=1.0, omega=1e-3)
        for l in (1, 3, 7):
            assert abs(jost_tm(l, 100.0, shell) - 1.0) <= 3e-5

    def test_imaginary_part_is_positive(self):
        shell = SphericalShell(radius=1.0, omega=2.0)
        rng = np.random.default_rng(29)
        for _ in range(40):
            l = int(rng.integers(1, 8))
            k0 = float(rng.uniform(0.05, 25.0))
            assert jost_tm(l, k0, shell).imag > 0.0


class TestStableImagFloor:
    def test_matches_independent_bessel_routines_everywhere(self):
        # the closed forms stay accurate deep in the small-k0R regime where
        # the direct imaginary part loses digits to cancellation
        shell = SphericalShell(radius=1.4, omega=3.0)
        for l in range(1, 11):
            for z in (0.05, 0.4, 1.0, l + 0.5, 3.0 * l, 28.0):
                k0 = z / shell.radius
                floor_te = _stable_imag_floor("te", l, k0, shell)
                oracle_te = (shell.omega * shell.radius**2 * k0
                             * special.spherical_jn(l, z) ** 2)
                assert floor_te == pytest.approx(oracle_te, rel=1e-10)
                floor_tm = _stable_imag_floor("tm", l, k0, shell)
                rjp = (special.spherical_jn(l, z)
                       + z * special.spherical_jn(l, z, derivative=True))
                oracle_tm = (shell.omega / k0) * rjp**2
                assert floor_tm == pytest.approx(oracle_tm, rel=1e-10)


class TestScanRealZeros:
    def test_no_zeros_on_coupling_grid(self):
        for l in range(1, 6):
            for omega in (0.1, 1.0, 10.0):
                shell = SphericalShell(radius=1.0, omega=omega)
                assert scan_real_zeros(l, shell) == []

    def test_transparent_shell_has_no_zeros(self):
        shell = SphericalShell(radius=1.0, omega=0.0)
        assert scan_real_zeros(2, shell) == []

    def test_coarse_sampling_warns(self):
        shell = SphericalShell(radius=1.0, omega=1.0)
        with pytest.warns(UserWarning):
            scan_real_zeros(1, shell, k0r_max=5.0, points_per_period=10)

    def test_raw_scan_exposes_certified_resonance_dip(self):
        # weak coupling and growing l produce a deep finite-width dip of
        # |g_tm|^2; its exact imaginary part stays far above evaluation
        # noise, so certification identifies it as a resonance, not a zero
        shell = SphericalShell(radius=1.0, omega=0.1)
        raw = scan_real_zeros(5, shell, certify_nonzero=False)
        dips = [c for c in raw if c.polarization == "tm"]
        assert len(dips) == 1
        dip = dips[0]
        assert isinstance(dip, ZeroCandidate)
        assert dip.min_abs_g_squared < 1e-6
        assert dip.imag_part_floor > 10.0 * dip.noise_bound
        # location tracks the multipole resonance estimate
        # k0 R = sqrt(Omega R l(l+1) / (2l+1))
        estimate = math.sqrt(0.1 * 5 * 6 / 11)
        assert dip.k0r_location == pytest.approx(estimate, rel=0.05)
        # certification removes the same dip
        assert scan_real_zeros(5, shell) == []

    def test_loose_threshold_reports_shallow_minima(self):
        shell = SphericalShell(radius=1.0, omega=1.0)
        found = scan_real_zeros(2, shell, threshold=0.5, certify_nonzero=False)
        assert len(found) >= 1
        assert all(c.min_abs_g_squared < 0.5 for c in found)

    def test_modulus_strictly_positive_through_resonance(self):
        shell = SphericalShell(radius=1.0, omega=0.1)
        grid = np.linspace(0.01, 2.0, 2000)
        values = [abs(jost_tm(5, float(z), shell)) for z in grid]
        assert min(values) > 0.0

    def test_rejects_bad_arguments(self):
        shell = SphericalShell(radius=1.0, omega=1.0)
        with pytest.raises(ValueError):
            scan_real_zeros(0, shell)
        with pytest.raises(ValueError):
            scan_real_zeros(1, shell, k0r_max=-1.0)


class TestTmFlatLimit:
    def test_propagating_value(self):
        k0, kpar, omega = 3.0, 2.0, 1.5
        gamma = math.sqrt(k0**2 - kpar**2)
        expected = 1.0 + 1j * omega * gamma / (2.0 * k0**2)
        assert tm_flat_limit(k0, kpar, omega) == pytest.approx(expected)

    def test_evanescent_value_is_real_below_one(self):
        g = tm_flat_limit(1.0, 2.0, 3.0)
        assert g.imag == 0.0
        assert g.real < 1.0

    def test_sphere_converges_at_fixed_parallel_momentum(self):
        # window-average jost_tm over one oscillation period T = pi k0/gamma
        # and compare to the flat asymptote; quadrupling the radius at fixed
        # kpar = l/R must shrink the deviation
        kpar, k0, omega = 1.0, 2.0, 3.0
        gamma = math.sqrt(k0**2 - kpar**2)
        period = math.pi * k0 / gamma
        deviations = []
        for l in (6, 24, 96):
            radius = l / kpar
            shell = SphericalShell(radius=radius, omega=omega)
            z0 = k0 * radius
            samples = z0 + np.arange(64) / 64.0 * period
            mean = np.mean([jost_tm(l, float(z) / radius, shell)
                            - tm_flat_limit(float(z) / radius, kpar, omega)
                            for z in samples])
            deviations.append(abs(mean))
        assert deviations[0] > deviations[1] > deviations[2]
        assert deviations[2] < 0.01


class TestJostEvaluation:
    def test_bundles_both_polarizations(self):
        shell = SphericalShell(radius=1.3, omega=2.0)
        result = evaluate_jost(4, 2.2, shell)
        assert result.gTE == jost_te(4, 2.2, shell)
        assert result.gTM == jost_tm(4, 2.2, shell)
        assert result.l == 4
        assert result.k0 == 2.2

    def test_rejects_fractional_order(self):
        with pytest.raises(ValueError):
            JostEvaluation(l=1.5, k0=1.0, gTE=1.0, gTM=1.0)
        with pytest.raises(ValueError):
            JostEvaluation(l=-1, k0=1.0, gTE=1.0, gTM=1.0)
