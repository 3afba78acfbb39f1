import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from functionals.constraints import (
    Membership,
    in_constraint_set,
    tau_c_duality_check,
)
from functionals.energy import (
    el_residual,
    energy,
    euler_lagrange,
    multiplier,
    multiplier_from_energy,
    nonlinearity,
    pohozaev_residual,
)
from functionals.model import constants, coupling, scaled_energy
from limit_harness.acceptance import energy_gradient_defect, random_spinor
from spectral_core.fields import SpinorField, gaussian_spinor
from spectral_core.grid import GridSpec
from spectral_core.norms import c_norm_sq


class ModelConstantsTests(SimpleTestCase):
    def test_subcritical_exponents(self):
        model = constants(2.5)
        self.assertAlmostEqual(model.zeta, 1.25)
        self.assertAlmostEqual(model.theta, 5.0)
        self.assertIsNone(model.s_exp)
        self.assertFalse(model.supercritical)

    def test_supercritical_cap_exponent(self):
        model = constants(2.8)
        self.assertAlmostEqual(model.s_exp, 1.75)
        self.assertTrue(model.supercritical)

    def test_exponent_range(self):
        for p in (2.0, 3.0, 1.5):
            with self.subTest(p=p), self.assertRaises(ValidationError):
                constants(p)

    def test_coupling(self):
        self.assertEqual(coupling(2.5, 0.0), 0.0)
        self.assertAlmostEqual(coupling(2.5, 0.5), 0.5 ** 1.25)
        self.assertEqual(coupling(2.8, 1.0), 1.0)

    def test_scaled_energy(self):
        self.assertAlmostEqual(scaled_energy(0.5, 2.0, 2.5), 2.0 / 32.0)


class EnergyTests(SimpleTestCase):
    def setUp(self):
        self.grid = GridSpec(n=16, box=6.0, c=2.0)
        self.rng = np.random.default_rng(21)
        self.u = random_spinor(self.grid, self.rng)

    def test_breakdown_adds_up(self):
        parts = energy(self.u)
        self.assertAlmostEqual(
            parts.total, parts.pos - parts.neg - parts.nl, places=12
        )
        self.assertAlmostEqual(
            parts.rest_subtracted, parts.total - self.grid.rest_energy
        )

    def test_positive_part_carries_c_norm(self):
        parts = energy(self.u)
        self.assertAlmostEqual(
            parts.pos + parts.neg, c_norm_sq(self.u), places=10
        )

    def test_gradient_matches_finite_differences(self):
        for _ in range(3):
            h = random_spinor(self.grid, self.rng)
            self.assertLess(energy_gradient_defect(self.u, h), 1e-5)

    def test_multiplier_two_ways(self):
        self.assertAlmostEqual(
            multiplier(self.u), multiplier_from_energy(self.u), places=10
        )

    def test_multiplier_needs_unit_mass(self):
        with self.assertRaises(ValidationError):
            multiplier(2.0 * self.u)

    def test_nonlinearity_vanishes_with_field(self):
        zero = SpinorField.zeros(self.grid)
        np.testing.assert_array_equal(nonlinearity(zero).data, 0.0)

    def test_nonlinearity_is_power_of_modulus(self):
        u = gaussian_spinor(self.grid)
        expected = u.modulus() ** (self.grid.p - 2.0) * u.data[0]
        np.testing.assert_allclose(
            nonlinearity(u).data[0], expected, rtol=1e-12
        )

    def test_residual_scales(self):
        omega = 0.8 * self.grid.rest_energy
        self.assertAlmostEqual(
            euler_lagrange(self.u, omega),
            2.0 * el_residual(self.u, omega),
            places=10,
        )

    def test_tau_enters_only_the_nonlinear_term(self):
        full, half = energy(self.u, 1.0), energy(self.u, 0.5)
        self.assertAlmostEqual(full.pos, half.pos)
        self.assertAlmostEqual(
            half.total - half.pos + half.neg,
            0.5 ** constants(2.5).zeta * (full.total - full.pos + full.neg),
            places=12,
        )

    def test_pohozaev_is_finite(self):
        self.assertTrue(np.isfinite(pohozaev_residual(self.u)))


class ConstraintTests(SimpleTestCase):
    def test_subcritical_classifies_by_mass_only(self):
        grid = GridSpec(n=16, box=6.0, c=2.0, p=2.5)
        u = gaussian_spinor(grid)
        check = in_constraint_set(u)
        self.assertIs(check.membership, Membership.INSIDE)
        self.assertFalse(check.cap_applicable)
        self.assertTrue(check.mass_ok)
        self.assertTrue(check.membership.feasible)
        self.assertIs(
            in_constraint_set(0.5 * u).membership, Membership.BOUNDARY_MASS
        )

    def test_mass_violation_wins(self):
        grid = GridSpec(n=16, box=6.0, c=2.0, p=2.8)
        check = in_constraint_set(2.0 * gaussian_spinor(grid))
        self.assertIs(check.membership, Membership.OUTSIDE_MASS)
        self.assertFalse(check.mass_ok)
        self.assertFalse(check.membership.feasible)

    def test_upper_spinor_inside_at_large_c(self):
        grid = GridSpec(n=16, box=6.0, c=10.0, p=2.9)
        check = in_constraint_set(gaussian_spinor(grid))
        self.assertIs(check.membership, Membership.INSIDE)
        self.assertTrue(check.cap_applicable)
        self.assertLess(check.c_norm_sq, check.cap_sq)

    def test_supercritical_cap(self):
        slow = GridSpec(n=16, box=6.0, c=1.0, p=2.8)
        self.assertIs(
            in_constraint_set(gaussian_spinor(slow)).membership,
            Membership.OUTSIDE_ENERGY,
        )
        u = gaussian_spinor(slow.replace(c=10.0))
        self.assertIs(in_constraint_set(u).membership, Membership.INSIDE)
        self.assertIs(
            in_constraint_set(0.5 * u).membership, Membership.BOUNDARY_MASS
        )

    def test_overflowing_norm_is_undefined(self):
        grid = GridSpec(n=16, box=6.0, c=2.0, p=2.5)
        u = 1e200 * gaussian_spinor(grid)
        with np.errstate(over='ignore', invalid='ignore'):
            check = in_constraint_set(u)
        self.assertIs(check.membership, Membership.UNDEFINED)
        self.assertFalse(check.membership.feasible)

    def test_duality_identity(self):
        grid = GridSpec(n=16, box=6.0, c=4.0)
        u = gaussian_spinor(grid, width=1.0)
        for c in (1.0, 2.0, 4.0):
            with self.subTest(c=c):
                self.assertLess(tau_c_duality_check(u, c), 1e-10)

    def test_duality_needs_c_at_least_one(self):
        grid = GridSpec(n=16, box=6.0, c=4.0)
        with self.assertRaises(ValidationError):
            tau_c_duality_check(gaussian_spinor(grid), 0.5)
