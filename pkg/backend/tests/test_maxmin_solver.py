import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, tag

from core.constants import (
    CROSS_OMEGA_TOL,
    CROSS_SOLVER_TOL,
    EL_RESIDUAL_TARGET,
    POHOZAEV_TARGET,
    VALUE_ROUNDOFF,
)
from core.exceptions import MaxIters
from functionals.energy import energy, multiplier
from limit_harness.acceptance import (
    envelope_gradient_defect,
    random_positive_direction,
    random_spinor,
    restart_distance,
    tangent_direction,
)
from maxmin_solver.alignment import align, align_phase, aligned_distance
from maxmin_solver.inner import check_positive_direction, inner_maximize
from maxmin_solver.outer import (
    Seed,
    fw_embedding,
    outer_minimize,
    seed_direction,
)
from maxmin_solver.scf import scf_oracle, scf_shift
from nls_limit.model import build_limit_model, limit_grid
from spectral_core.fields import PairField, gaussian_spinor
from spectral_core.grid import GridSpec
from spectral_core.norms import c_norm_sq, l2_norm, normalize
from spectral_core.operators import Sign, project
from spectral_core.scaling import translate


class InnerMaximizeTests(SimpleTestCase):
    def setUp(self):
        self.grid = GridSpec(n=16, box=6.0, c=2.0)
        self.rng = np.random.default_rng(31)
        self.w = random_positive_direction(self.grid, self.rng)

    def test_maximizer_on_the_slice(self):
        result = inner_maximize(self.w)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(l2_norm(result.u_star), 1.0, places=10)
        self.assertGreater(result.amplitude, 0.0)
        self.assertLess(l2_norm(project(result.eta, Sign.PLUS)), 1e-10)
        self.assertGreaterEqual(result.value, energy(self.w).total - 1e-10)
        self.assertLessEqual(result.value, c_norm_sq(self.w) + 1e-8)

    def test_multiplier_of_maximizer(self):
        result = inner_maximize(self.w)
        self.assertAlmostEqual(
            result.omega, multiplier(result.u_star), places=8
        )

    def test_ascent_never_loses_value(self):
        history = inner_maximize(self.w).history
        for before, after in zip(history, history[1:]):
            self.assertGreaterEqual(
                after, before - VALUE_ROUNDOFF * max(1.0, abs(before))
            )

    def test_linear_slice_keeps_direction(self):
        result = inner_maximize(self.w, tau=0.0)
        self.assertLess(l2_norm(result.u_star - self.w), 1e-10)
        self.assertLess(l2_norm(result.eta), 1e-10)

    def test_restart_from_negative_part(self):
        self.assertLess(restart_distance(self.w, self.rng), 1e-6)

    def test_iteration_cap_carries_partial_result(self):
        with self.assertRaises(MaxIters) as raised:
            inner_maximize(self.w, tol=1e-30, max_iters=2)
        self.assertFalse(raised.exception.result.converged)
        self.assertEqual(raised.exception.result.iters, 2)

    def test_direction_must_be_normalized(self):
        with self.assertRaises(ValidationError):
            inner_maximize(2.0 * self.w)

    def test_direction_must_be_positive(self):
        u = random_spinor(self.grid, self.rng)
        w = normalize(project(u, Sign.MINUS))
        with self.assertRaises(ValidationError):
            check_positive_direction(w)


class EnvelopeGradientTests(SimpleTestCase):
    def test_matches_finite_differences(self):
        grid = GridSpec(n=16, box=6.0, c=2.0)
        rng = np.random.default_rng(41)
        w = random_positive_direction(grid, rng)
        self.assertLess(
            envelope_gradient_defect(w, tangent_direction(w, rng)), 1e-5
        )


class SeedTests(SimpleTestCase):
    def test_fw_embedding_lies_in_positive_subspace(self):
        grid = GridSpec(n=16, box=6.0, c=3.0)
        data = np.zeros((2,) + grid.shape)
        data[0] = np.exp(-0.5 * grid.radius() ** 2)
        w = fw_embedding(PairField(data, grid))
        self.assertAlmostEqual(l2_norm(w), 1.0, places=12)
        self.assertLess(l2_norm(project(w, Sign.MINUS)), 1e-12)

    def test_gaussian_seed(self):
        grid = GridSpec(n=16, box=6.0, c=3.0)
        w = seed_direction(grid, Seed.GAUSSIAN)
        check_positive_direction(w)

    def test_field_seed_is_projected(self):
        grid = GridSpec(n=16, box=6.0, c=3.0)
        w = seed_direction(grid, gaussian_spinor(grid))
        check_positive_direction(w)


class AlignmentTests(SimpleTestCase):
    def setUp(self):
        self.grid = GridSpec(n=16, box=6.0, c=2.0)
        self.u = gaussian_spinor(self.grid, width=1.2)

    def test_phase(self):
        rotated = np.exp(0.9j) * self.u
        aligned = align_phase(rotated, self.u)
        self.assertLess(l2_norm(aligned - self.u), 1e-12)

    def test_phase_and_translation(self):
        shift = (2 * self.grid.spacing, -self.grid.spacing, 0.0)
        moved = np.exp(-2.0j) * translate(self.u, shift)
        self.assertLess(l2_norm(align(moved, self.u) - self.u), 1e-10)
        self.assertLess(aligned_distance(moved, self.u), 1e-10)


class ScfShiftTests(SimpleTestCase):
    def test_shift_only_near_gap_edge(self):
        grid = GridSpec(n=16, box=6.0, c=2.0)
        rest = grid.rest_energy
        self.assertEqual(scf_shift(grid, 0.5 * rest), 0.0)
        self.assertAlmostEqual(
            scf_shift(grid, 0.99 * rest), 0.5 * 0.01 * rest
        )

    def test_linear_problem_sits_at_gap_edge(self):
        grid = GridSpec(n=16, box=6.0, c=2.0)
        report = scf_oracle(grid, gaussian_spinor(grid), tau=0.0)
        self.assertAlmostEqual(
            report.omega / grid.rest_energy, 1.0, delta=CROSS_OMEGA_TOL
        )


@tag('slow')
class GroundStateTests(SimpleTestCase):
    """Single solve at p=2.5, m=1, c=20 on the default 48^3 grid."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.model = build_limit_model(2.5, 1.0)
        cls.grid = limit_grid(2.5, 1.0, cls.model.nu, n=48, c=20.0)
        cls.report = outer_minimize(cls.grid, model=cls.model)

    def test_converged_state(self):
        report, rest = self.report, self.grid.rest_energy
        self.assertTrue(report.converged)
        self.assertLessEqual(report.el_residual, EL_RESIDUAL_TARGET * rest)
        self.assertGreater(report.omega, 0.0)
        self.assertLess(report.omega, rest)
        self.assertGreater(report.energy, 0.0)
        self.assertLess(report.energy, rest)
        self.assertLessEqual(abs(report.pohozaev), POHOZAEV_TARGET * rest)

    def test_agrees_with_scf(self):
        seed = seed_direction(self.grid, model=self.model)
        scf = scf_oracle(self.grid, seed)
        distance = aligned_distance(
            scf.ground_state, self.report.ground_state
        )
        self.assertLessEqual(distance, CROSS_SOLVER_TOL)
        self.assertLessEqual(
            abs(scf.omega - self.report.omega),
            CROSS_OMEGA_TOL * self.grid.rest_energy,
        )

    def test_outer_descent_never_gains_value(self):
        values = [value for value, _ in self.report.history]
        self.assertEqual(len(values), self.report.iterations + 1)
        for before, after in zip(values, values[1:]):
            self.assertLessEqual(
                after, before + VALUE_ROUNDOFF * max(1.0, abs(before))
            )

    def test_energy_decreases_with_tau(self):
        half = outer_minimize(self.grid.replace(tau=0.5), model=self.model)
        self.assertLess(self.report.energy, half.energy)
