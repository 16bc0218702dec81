"""Reflection coefficients, matching conditions, basis and plasmon branch."""

import cmath
import math

import numpy as np
import pytest

from plasmasheet import sheet
from plasmasheet.errors import (DegenerateMomentumError, OnLightConeError)

SQ3 = math.sqrt(3.0)


def momentum(k0, kpar):
    return sheet.MinkowskiMomentum.from_parallel(k0, kpar)


class TestTypes:
    def test_kpar_derived(self):
        k = sheet.MinkowskiMomentum(k0=1.0, k1=3.0, k2=4.0)
        assert k.kpar == 5.0

    def test_sheet_validation(self):
        with pytest.raises(ValueError):
            sheet.SheetParameters(omega=-1.0)
        with pytest.raises(ValueError):
            sheet.SheetParameters(omega=1.0, positions=(0.0, 0.0))
        with pytest.raises(ValueError):
            sheet.SheetParameters(omega=1.0, positions=(0.0, 1.0, 2.0))
        two = sheet.SheetParameters(omega=1.0, positions=(0.0, 2.5))
        assert two.positions == (0.0, 2.5)

    def test_transparent_sheet_allowed(self):
        assert sheet.SheetParameters(omega=0.0).omega == 0.0

    def test_euclidean_gamma(self):
        k = sheet.EuclideanMomentum(k4=3.0, kpar=4.0)
        assert k.gamma == 5.0
        with pytest.raises(ValueError):
            sheet.EuclideanMomentum(k4=-1.0, kpar=0.0)


class TestGamma:
    def test_propagating(self):
        g = sheet.gamma_minkowski(momentum(2.0, 1.0))
        assert abs(g - SQ3) < 1e-15

    def test_evanescent(self):
        g = sheet.gamma_minkowski(momentum(1.0, 2.0))
        assert abs(g - 1j * SQ3) < 1e-15

    def test_branch_sign_random(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            k0, kpar = rng.uniform(-5, 5), rng.uniform(0, 5)
            g = sheet.gamma_minkowski(momentum(k0, kpar))
            assert g.imag >= 0.0
            if g.imag == 0.0:
                assert g.real >= 0.0

    def test_wick_rotation_gives_i_gamma(self):
        ke = sheet.EuclideanMomentum(k4=1.3, kpar=0.7)
        g = sheet.gamma_minkowski(momentum(1j * ke.k4, ke.kpar))
        assert abs(g - 1j * ke.gamma) < 1e-15


class TestReflection:
    def test_te_value(self):
        r = sheet.reflection_te(momentum(2.0, 1.0), sheet.SheetParameters(1.0))
        assert abs(r - 1.0 / (1.0 - 2j * SQ3)) < 1e-15

    def test_scalar_value(self):
        r = sheet.scalar_reflection(momentum(2.0, 1.0), sheet.SheetParameters(1.0))
        assert abs(r - 1.0 / (1.0 - 8j * SQ3)) < 1e-15

    def test_static_tm_is_one(self):
        for kpar in (1e-3, 0.5, 2.0, 50.0):
            r = sheet.reflection_tm(momentum(0.0, kpar), sheet.SheetParameters(2.0))
            assert r == 1.0 + 0.0j

    def test_static_scalar_is_one(self):
        r = sheet.scalar_reflection(momentum(0.0, 1.5), sheet.SheetParameters(2.0))
        assert r == 1.0 + 0.0j

    def test_ideal_conductor_limit(self):
        k = momentum(2.0, 1.0)
        big = sheet.SheetParameters(1e9)
        assert abs(sheet.reflection_te(k, big) - 1.0) < 1e-8
        assert abs(sheet.reflection_tm(k, big) - 1.0) < 1e-8

    def test_transparent_limit(self):
        k = momentum(2.0, 1.0)
        off = sheet.SheetParameters(0.0)
        assert sheet.reflection_te(k, off) == 0.0
        assert sheet.reflection_tm(k, off) == 0.0
        assert sheet.scalar_reflection(k, off) == 0.0

    def test_moduli_bounded_in_propagating_region(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            kpar = rng.uniform(0.01, 3.0)
            k0 = kpar * rng.uniform(1.001, 5.0)
            om = 10.0 ** rng.uniform(-2, 2)
            k, sp = momentum(k0, kpar), sheet.SheetParameters(om)
            assert abs(sheet.reflection_te(k, sp)) <= 1.0 + 1e-12
            assert abs(sheet.reflection_tm(k, sp)) <= 1.0 + 1e-12

    def test_light_cone_error(self):
        with pytest.raises(OnLightConeError):
            sheet.reflection_tm(momentum(1.0, 1.0), sheet.SheetParameters(1.0))

    def test_tm_pole_sits_on_plasmon_branch(self):
        sp = sheet.SheetParameters(1.0)
        kpar = 2.0
        k0 = sheet.tm_plasmon_closed(kpar, sp) * (1.0 + 1e-9)
        r = sheet.reflection_tm(momentum(k0, kpar), sp)
        assert abs(r) > 1e5


class TestEuclideanReflection:
    def test_te_half_point(self):
        sp = sheet.SheetParameters(2.0)
        k = sheet.EuclideanMomentum(k4=0.6, kpar=0.8)  # gamma = 1 = omega/2
        assert abs(sheet.reflection_te_euclidean(k, sp) - 0.5) < 1e-15

    def test_ranges_and_monotonicity(self):
        sp = sheet.SheetParameters(1.5)
        prev_te = prev_tm = 1.0
        for g in np.linspace(0.3, 30.0, 40):
            k = sheet.EuclideanMomentum(k4=g * 0.6, kpar=g * 0.8)
            rte = sheet.reflection_te_euclidean(k, sp)
            rtm = sheet.reflection_tm_euclidean(k, sp)
            assert 0.0 < rte < 1.0 and 0.0 < rtm < 1.0
            assert rte < prev_te and rtm < prev_tm  # decreasing along the ray
            prev_te, prev_tm = rte, rtm

    def test_static_tm_euclidean(self):
        sp = sheet.SheetParameters(1.5)
        k = sheet.EuclideanMomentum(k4=0.0, kpar=2.0)
        assert sheet.reflection_tm_euclidean(k, sp) == 1.0

    def test_gamma_zero_degenerate(self):
        with pytest.raises(DegenerateMomentumError):
            sheet.reflection_te_euclidean(sheet.EuclideanMomentum(0.0, 0.0),
                                          sheet.SheetParameters(1.0))

    def test_wick_consistency(self):
        # Minkowski coefficients continued to k0 = i k4 must land exactly on
        # the Euclidean ones.
        rng = np.random.default_rng(3)
        for _ in range(20):
            k4 = rng.uniform(0.05, 4.0)
            kpar = rng.uniform(0.05, 4.0)
            om = 10.0 ** rng.uniform(-1.5, 1.5)
            sp = sheet.SheetParameters(om)
            ke = sheet.EuclideanMomentum(k4=k4, kpar=kpar)
            km = momentum(1j * k4, kpar)
            assert abs(sheet.reflection_te(km, sp)
                       - sheet.reflection_te_euclidean(ke, sp)) < 1e-12
            assert abs(sheet.reflection_tm(km, sp)
                       - sheet.reflection_tm_euclidean(ke, sp)) < 1e-12


class TestPropagator:
    SP = sheet.SheetParameters(1.3)

    def test_transparent_sheet_gives_free_propagator(self):
        k = momentum(2.0, 1.0)
        g = sheet.gamma_minkowski(k)
        d = sheet.scalar_propagator(0.4, 1.1, k, sheet.SheetParameters(0.0))
        free = cmath.exp(1j * g * 0.7) / (2j * g)
        assert abs(d - free) < 1e-15

    def test_symmetry_in_arguments(self):
        k = momentum(2.0, 1.0)
        for pol in ("scalar", "te", "tm"):
            a = sheet.scalar_propagator(0.3, 0.9, k, self.SP, polarization=pol)
            b = sheet.scalar_propagator(0.9, 0.3, k, self.SP, polarization=pol)
            assert abs(a - b) < 1e-15

    def test_parts_add_up(self):
        k = momentum(2.0, 1.0)
        free, boundary = sheet.scalar_propagator(0.3, 0.9, k, self.SP, parts=True)
        total = sheet.scalar_propagator(0.3, 0.9, k, self.SP)
        assert abs(total - (free - boundary)) == 0.0

    def test_needs_origin_sheet(self):
        k = momentum(2.0, 1.0)
        with pytest.raises(ValueError):
            sheet.scalar_propagator(0.1, 0.9, k, sheet.SheetParameters(1.0, (1.0,)))

    def test_light_cone_error(self):
        with pytest.raises(OnLightConeError):
            sheet.scalar_propagator(0.1, 0.9, momentum(1.0, 1.0), self.SP)


class TestMatching:
    def test_transparent_sheet_residuals_vanish_identically(self):
        k = momentum(2.0, 1.0)
        cont, jump = sheet.matching_residual(k, sheet.SheetParameters(0.0),
                                             polarization="te", probe_offset=0.01)
        assert cont == 0.0 and jump == 0.0

    def test_second_order_convergence(self):
        rng = np.random.default_rng(5)
        sp = sheet.SheetParameters(0.8)
        for pol in ("scalar", "te", "tm"):
            for _ in range(5):
                k0 = rng.uniform(0.5, 2.5)
                kpar = rng.uniform(0.5, 2.5)
                if abs(k0 - kpar) < 0.2:
                    k0 += 0.5
                k = momentum(k0, kpar)
                h = 0.01 / abs(sheet.gamma_minkowski(k))
                y3 = 1.0
                c1, j1 = sheet.matching_residual(k, sp, pol, h, y3=y3)
                c2, j2 = sheet.matching_residual(k, sp, pol, h / 2, y3=y3)
                assert c2 <= c1 / 3.2 or c1 < 1e-13
                assert j2 <= j1 / 3.2 or j1 < 1e-13

    def test_te_jump_coefficient_is_omega_even_statically(self):
        # TE matching carries no 1/k0^2; the static mode must work.
        k = momentum(0.0, 1.5)
        sp = sheet.SheetParameters(2.0)
        _, jump = sheet.matching_residual(k, sp, "te", probe_offset=1e-4)
        assert jump < 1e-8  # a wrong coefficient would sit at O(0.1)

    def test_scalar_jump_needs_k0(self):
        with pytest.raises(DegenerateMomentumError):
            sheet.matching_residual(momentum(0.0, 1.5), sheet.SheetParameters(1.0),
                                    "scalar", probe_offset=1e-3)


class TestPolarizationBasis:
    def test_orthonormal_and_complete_at_reference_point(self):
        k = sheet.MinkowskiMomentum(k0=2.0, k1=0.8, k2=0.6)
        basis = sheet.polarization_basis(k)
        assert basis.orthonormality_residual() < 1e-12
        assert basis.completeness_residual() < 1e-12

    def test_te_vector_lies_in_plane_and_transverse(self):
        k = sheet.MinkowskiMomentum(k0=2.0, k1=0.8, k2=0.6)
        e1 = sheet.polarization_basis(k).e1
        assert e1[0] == 0.0 and e1[3] == 0.0
        # orthogonal to the spatial parallel momentum
        assert abs(e1[1] * k.k1 + e1[2] * k.k2) < 1e-15

    def test_random_momenta_propagating(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            kpar = rng.uniform(0.05, 3.0)
            phi = rng.uniform(0.0, 2 * math.pi)
            k0 = kpar * rng.uniform(1.01, 4.0) * rng.choice([-1.0, 1.0])
            k = sheet.MinkowskiMomentum(k0=k0, k1=kpar * math.cos(phi),
                                        k2=kpar * math.sin(phi))
            basis = sheet.polarization_basis(k)
            assert basis.completeness_residual() < 1e-12

    def test_evanescent_momentum_still_complete(self):
        k = sheet.MinkowskiMomentum(k0=0.5, k1=0.8, k2=0.6)
        assert sheet.polarization_basis(k).completeness_residual() < 1e-12

    def test_degenerate_errors(self):
        with pytest.raises(DegenerateMomentumError):
            sheet.polarization_basis(sheet.MinkowskiMomentum(k0=1.0))
        with pytest.raises(DegenerateMomentumError):
            sheet.polarization_basis(sheet.MinkowskiMomentum(k0=1.0, k1=1.0))


class TestPlasmon:
    def test_closed_form_reference_point(self):
        sp = sheet.SheetParameters(1.0)
        k0 = sheet.tm_plasmon_closed(1.0, sp)
        assert abs(k0 * k0 - (math.sqrt(17.0) - 1.0) / 8.0) < 1e-15

    def test_root_agrees_with_closed_form(self):
        sp = sheet.SheetParameters(1.0)
        for kpar in np.logspace(-3, 3, 50):
            a = sheet.tm_plasmon_closed(kpar, sp)
            b = sheet.tm_plasmon_root(kpar, sp)
            assert abs(a - b) <= 1e-10 * a

    def test_below_light_cone(self):
        sp = sheet.SheetParameters(2.7)
        for kpar in np.logspace(-3, 3, 30):
            assert 0.0 < sheet.tm_plasmon_closed(kpar, sp) < kpar

    def test_asymptotes(self):
        sp = sheet.SheetParameters(1.0)
        # deep subwavelength: hugs the light cone
        assert abs(sheet.tm_plasmon_closed(1e-3, sp) / 1e-3 - 1.0) < 1e-5
        # short wavelength: k0 -> sqrt(Omega kpar / 2)
        kp = 1e4
        assert abs(sheet.tm_plasmon_closed(kp, sp) / math.sqrt(kp / 2.0) - 1.0) < 1e-3

    def test_te_has_no_plasmon(self):
        sp = sheet.SheetParameters(0.5)
        for kpar in np.logspace(-3, 3, 25):
            assert sheet.te_plasmon_exists(kpar, sp) is False

    def test_branch_object(self):
        sp = sheet.SheetParameters(2.0)
        branch = sheet.plasmon_branch(sp)
        assert len(branch.kpar) == 50
        assert branch.kpar[0] == pytest.approx(2.0e-3)
        assert np.all(branch.k0 < branch.kpar)
        assert np.all(np.diff(branch.k0) > 0.0)
