import json
import math
import tempfile
from dataclasses import replace
from pathlib import Path
from types import SimpleNamespace

import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, tag

from core.constants import DEFAULT_C_LIST, NEG_L2_SLOPE
from core.exceptions import (
    BadMagic,
    FieldFormatError,
    TailTooShort,
    TruncatedPayload,
    VersionMismatch,
)
from limit_harness.acceptance import random_spinor, run_acceptance
from limit_harness.criteria import (
    CriterionResult,
    scan_criteria,
    sweep_criteria,
)
from limit_harness.fitting import Component, fit_columns, fit_decay, fit_rate
from limit_harness.observables import amplitude_ratio, closure_residual
from limit_harness.persistence import (
    decode_field,
    encode_field,
    file_digest,
    load_field,
    read_field_header,
    save_field,
)
from limit_harness.records import COLUMNS, SweepRecord
from limit_harness.reports import (
    build_summary,
    emit_report,
    read_report_csv,
    schema_errors,
    write_csv,
)
from limit_harness.serializers import ReportSerializer
from limit_harness.sweep import (
    EnergyScan,
    SweepSettings,
    box_refinement,
    energy_scan,
    run_sweep,
    solve_single,
)
from maxmin_solver.alignment import aligned_distance
from spectral_core.fields import SpinorField, gaussian_spinor
from spectral_core.grid import GridSpec, forward, multipliers
from spectral_core.operators import sigma_dot

C_LIST = (8.0, 16.0, 32.0, 64.0)


def make_record(c, **values):
    row = dict.fromkeys(COLUMNS, 0.0)
    row.update(c=c, **values)
    return SweepRecord(**row)


def converging_records(decay_rate=1.0, nu=0.5):
    """Rows that follow every expected large-c rate."""
    return [
        make_record(
            c,
            gap=nu * (1.0 + 1.0 / c),
            g_norm_s0=3.0 / c,
            g_norm_s1_5=2.0 / c ** 0.5,
            neg_l2=5.0 / c ** 2,
            decay_ratio_minus=1.0 / c,
            orbit_dist=0.1 / c,
            h2_norm=1.0 + 0.1 / c,
            decay_delta_plus=0.9 * decay_rate,
        )
        for c in C_LIST
    ]


class RateFitTests(SimpleTestCase):
    def test_exact_power_law(self):
        fit = fit_rate([(c, 7.0 / c) for c in C_LIST])
        self.assertAlmostEqual(fit.slope, -1.0, places=12)
        self.assertAlmostEqual(fit.prefactor, 7.0, places=10)
        self.assertAlmostEqual(fit.r_squared, 1.0, places=12)

    def test_half_power(self):
        fit = fit_rate([(c, 3.0 * c ** -0.5) for c in C_LIST])
        self.assertAlmostEqual(fit.slope, -0.5, places=12)

    def test_needs_three_points(self):
        with self.assertRaises(ValidationError):
            fit_rate([(1.0, 1.0), (2.0, 0.5)])

    def test_needs_positive_values(self):
        with self.assertRaises(ValidationError):
            fit_rate([(1.0, 1.0), (2.0, 0.0), (4.0, 0.25)])

    def test_columns_with_zeros_are_skipped(self):
        fits = fit_columns(converging_records(), ('g_norm_s0', 'pohozaev'))
        self.assertEqual(set(fits), {'g_norm_s0'})


class DecayFitTests(SimpleTestCase):
    def setUp(self):
        self.grid = GridSpec(n=32, box=10.0)

    def tail(self, rate, yukawa=True):
        radius = self.grid.radius()
        data = np.zeros((4,) + self.grid.shape)
        data[0] = np.exp(-rate * radius)
        if yukawa:
            data[0] /= np.maximum(radius, 1e-3)
        return SpinorField(data, self.grid)

    def test_recovers_yukawa_rate(self):
        fit = fit_decay(self.tail(2.0), Component.UPPER)
        self.assertAlmostEqual(fit.delta, 2.0, delta=0.02)
        self.assertAlmostEqual(fit.prefactor, 1.0, delta=0.1)

    def test_plain_exponential_without_weight(self):
        fit = fit_decay(
            self.tail(2.0, yukawa=False), Component.UPPER, yukawa=False
        )
        self.assertAlmostEqual(fit.delta, 2.0, delta=0.02)

    def test_unweighted_fit_is_biased_on_yukawa_tail(self):
        weighted = fit_decay(self.tail(1.5), Component.UPPER)
        plain = fit_decay(self.tail(1.5), Component.UPPER, yukawa=False)
        self.assertGreater(plain.delta, weighted.delta + 0.05)

    def test_empty_component(self):
        with self.assertRaises(TailTooShort):
            fit_decay(self.tail(2.0), Component.LOWER)

    def test_slow_tail_is_too_short(self):
        with self.assertRaises(TailTooShort):
            fit_decay(self.tail(0.5, yukawa=False), 'upper', yukawa=False)


class SweepRecordTests(SimpleTestCase):
    def test_row_follows_columns(self):
        record = make_record(4.0, e_c=1.5)
        row = record.as_row()
        self.assertEqual(len(row), len(COLUMNS))
        self.assertEqual(row[0], 4.0)
        self.assertEqual(row[COLUMNS.index('e_c')], 1.5)

    def test_from_text_row(self):
        text = {name: str(index) for index, name in enumerate(COLUMNS)}
        record = SweepRecord.from_row(text)
        self.assertEqual(
            record.as_row(), tuple(map(float, range(len(COLUMNS))))
        )

    def test_nan_is_stored_as_null(self):
        fields = make_record(2.0, decay_delta_plus=math.nan).as_model_fields()
        self.assertIsNone(fields['decay_delta_plus'])
        self.assertEqual(fields['c'], 2.0)

    def test_g_norms_by_order(self):
        record = make_record(2.0, g_norm_s1_5=0.3)
        self.assertEqual(record.g_norms[1.5], 0.3)


class CriteriaTests(SimpleTestCase):
    def setUp(self):
        self.model = SimpleNamespace(nu=0.5, decay_rate=1.0)

    def test_json_form(self):
        data = CriterionResult(
            'x', False, math.nan, (1.0, np.float64(2.0))
        ).as_dict()
        self.assertIsNone(data['value'])
        self.assertEqual(data['threshold'], [1.0, 2.0])
        json.dumps(data, allow_nan=False)

    def test_converging_sweep_passes(self):
        records = converging_records()
        results = sweep_criteria(records, fit_columns(records), self.model)
        failed = [item.name for item in results if not item.passed]
        self.assertEqual(failed, [])

    def test_orbit_distance_must_decrease(self):
        records = converging_records()
        records[2] = replace(records[2], orbit_dist=1.0)
        results = {
            item.name: item
            for item in sweep_criteria(
                records, fit_columns(records), self.model
            )
        }
        self.assertFalse(results['orbit_dist_decreasing'].passed)
        self.assertTrue(results['orbit_dist_final'].passed)

    def test_missing_fit_fails(self):
        records = converging_records()
        results = {
            item.name: item
            for item in sweep_criteria(records, {}, self.model)
        }
        self.assertFalse(results['g_norm_s0_slope'].passed)
        self.assertEqual(results['g_norm_s0_slope'].detail, 'fit missing')

    def test_lower_spinor_rates_are_one_sided(self):
        records = [
            replace(record, neg_l2=5.0 / record.c ** 3,
                    g_norm_s1_5=2.0 / record.c)
            for record in converging_records()
        ]
        results = {
            item.name: item
            for item in sweep_criteria(
                records, fit_columns(records), self.model
            )
        }
        self.assertTrue(results['neg_l2_slope'].passed)
        self.assertTrue(results['g_norm_s1_5_slope'].passed)
        self.assertEqual(results['neg_l2_slope'].threshold, NEG_L2_SLOPE[1])

    def test_slow_lower_spinor_decay_fails(self):
        records = [
            replace(record, neg_l2=5.0 / record.c)
            for record in converging_records()
        ]
        results = {
            item.name: item
            for item in sweep_criteria(
                records, fit_columns(records), self.model
            )
        }
        self.assertFalse(results['neg_l2_slope'].passed)

    def test_energy_scan_verdicts(self):
        scan = EnergyScan(
            rows=((0.5, 2.0, 1.0), (1.0, 1.5, 1.5)),
            monotone=True,
            subadditive=False,
            pair_rows=((0.5, 0.5, 1.5, 2.0), (0.3, 0.5, 1.2, 1.1)),
        )
        results = {item.name: item for item in scan_criteria(scan)}
        self.assertTrue(results['energy_monotone'].passed)
        subadditive = results['energy_subadditive']
        self.assertFalse(subadditive.passed)
        self.assertEqual(subadditive.value, [[1.5, 2.0], [1.2, 1.1]])

    def test_single_tau_has_no_scan_verdicts(self):
        scan = EnergyScan(rows=((1.0, 1.5, 1.5),), monotone=True,
                          subadditive=None)
        self.assertEqual(scan_criteria(scan), [])


class ReportTests(SimpleTestCase):
    def setUp(self):
        self.records = converging_records()
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def test_csv_round_trip(self):
        write_csv(self.records, self.path / 'rows.csv')
        self.assertEqual(read_report_csv(self.path / 'rows.csv'), self.records)

    def test_foreign_header(self):
        (self.path / 'rows.csv').write_text('a,b\n1,2\n', encoding='utf-8')
        with self.assertRaises(ValidationError):
            read_report_csv(self.path / 'rows.csv')

    def test_report_without_fits_is_incomplete(self):
        csv_path, json_path, summary = emit_report(
            self.records, {}, self.path, settings={'p': 2.5}
        )
        self.assertEqual(summary['status'], 'incomplete')
        written = json.loads(json_path.read_text(encoding='utf-8'))
        self.assertEqual(written['row_count'], len(self.records))
        self.assertEqual(written['columns'], list(COLUMNS))
        self.assertTrue(csv_path.exists())

    def test_passing_report(self):
        fits = fit_columns(self.records)
        criteria = [CriterionResult('ok', True, 1.0, 2.0)]
        _, _, summary = emit_report(
            self.records, fits, self.path, criteria=criteria
        )
        self.assertEqual(summary['status'], 'passed')
        self.assertIn('g_norm_s0', [fit['column'] for fit in summary['fits']])

    def test_failing_report(self):
        fits = fit_columns(self.records)
        criteria = [CriterionResult('bad', False, 3.0, 2.0)]
        _, _, summary = emit_report(
            self.records, fits, self.path, criteria=criteria
        )
        self.assertEqual(summary['status'], 'failed')

    def test_box_refinement_is_carried(self):
        refinement = {
            'factor': 1.25, 'box': 10.0, 'n': 20,
            'omega_delta': 1e-9, 'energy_delta': 2e-9,
        }
        _, json_path, summary = emit_report(
            self.records, {}, self.path, refinement=refinement
        )
        written = json.loads(json_path.read_text(encoding='utf-8'))
        self.assertEqual(written['refinement'], refinement)
        self.assertIsNone(build_summary(self.records, {})['refinement'])

    def test_empty_report_rejected(self):
        with self.assertRaises(ValidationError):
            emit_report([], {}, self.path)

    def test_status_rule_is_enforced(self):
        summary = build_summary(self.records, {})
        summary['status'] = 'passed'
        self.assertFalse(ReportSerializer(data=summary).is_valid())

    def test_unknown_columns_rejected(self):
        summary = build_summary(self.records, {})
        summary['columns'] = ['c']
        serializer = ReportSerializer(data=summary)
        self.assertFalse(serializer.is_valid())
        self.assertIn('columns', serializer.errors)

    def test_written_summary_matches_shipped_schema(self):
        fits = fit_columns(self.records)
        criteria = [CriterionResult('ok', True, [1.0, float('nan')], 2.0)]
        refinement = {
            'factor': 1.25, 'box': 10.0, 'n': 20,
            'omega_delta': 0.0, 'energy_delta': 1e-9,
        }
        for extra in ({}, {'refinement': refinement}):
            with self.subTest(refinement=bool(extra)):
                _, json_path, _ = emit_report(
                    self.records, fits, self.path, criteria=criteria,
                    settings={'p': 2.5, 'box': None},
                    failures=[{'c': 128.0, 'error': 'MaxIters'}],
                    fields=[{'path': 'u.ndgs', 'sha256': 'ab' * 32}],
                    **extra,
                )
                written = json.loads(json_path.read_text(encoding='utf-8'))
                self.assertEqual(schema_errors(written), [])

    def test_schema_catches_drift(self):
        summary = build_summary(self.records, {})
        self.assertEqual(schema_errors(summary), [])
        drifted = dict(summary, status='passed')
        self.assertTrue(schema_errors(drifted))
        self.assertTrue(schema_errors(dict(summary, extra=1)))
        del summary['field_files']
        self.assertTrue(schema_errors(summary))


class ObservableTests(SimpleTestCase):
    def test_closure_of_leading_order_lower_pair(self):
        grid = GridSpec(n=16, box=6.0, m=1.0, c=3.0)
        f = forward(gaussian_spinor(grid).data[:2])
        xi = multipliers(grid).xi
        g = sigma_dot(xi, f) / (2.0 * grid.m * grid.c)
        u = SpinorField.from_spectrum(np.concatenate([f, g]), grid)
        self.assertLess(closure_residual(u), 1e-12)

    def test_upper_only_state_has_residual(self):
        grid = GridSpec(n=16, box=6.0, c=3.0)
        self.assertGreater(closure_residual(gaussian_spinor(grid)), 0.0)

    def test_amplitude_ratio(self):
        grid = GridSpec(n=16, box=6.0)
        data = np.zeros((4,) + grid.shape)
        data[0, 0, 0, 0] = 2.0
        data[3, 1, 0, 0] = -0.5
        self.assertAlmostEqual(amplitude_ratio(SpinorField(data, grid)), 0.25)


class FieldFileTests(SimpleTestCase):
    def setUp(self):
        self.grid = GridSpec(n=8, box=3.0, c=5.0, tau=0.75)
        self.u = random_spinor(self.grid, np.random.default_rng(9), 1.0)
        self.raw = encode_field(self.u)

    def test_round_trip_is_bitwise(self):
        loaded = decode_field(self.raw)
        self.assertEqual(loaded.grid, self.grid)
        self.assertEqual(loaded.data.tobytes(), self.u.data.tobytes())

    def test_truncated_payload(self):
        with self.assertRaises(TruncatedPayload):
            decode_field(self.raw[:-16])
        with self.assertRaises(TruncatedPayload):
            decode_field(self.raw[:10])

    def test_trailing_bytes(self):
        with self.assertRaises(FieldFormatError) as raised:
            decode_field(self.raw + b'\x00')
        self.assertIs(type(raised.exception), FieldFormatError)

    def test_bad_magic(self):
        with self.assertRaises(BadMagic):
            decode_field(b'XXXX' + self.raw[4:])

    def test_version_mismatch(self):
        raw = self.raw[:4] + (2).to_bytes(4, 'little') + self.raw[8:]
        with self.assertRaises(VersionMismatch):
            decode_field(raw)

    def test_files_and_digest(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'u.ndgs'
            digest = save_field(self.u, path)
            self.assertEqual(digest, file_digest(path))
            self.assertEqual(read_field_header(path).grid(), self.grid)
            self.assertEqual(
                load_field(path).data.tobytes(), self.u.data.tobytes()
            )


class AcceptanceTests(SimpleTestCase):
    def test_light_suites_pass(self):
        results = run_acceptance(['algebra', 'persistence'], seed=3)
        self.assertTrue(results)
        failed = [item.name for item in results if not item.passed]
        self.assertEqual(failed, [])

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            run_acceptance(['nonsense'])


@tag('slow')
class HeavyAcceptanceTests(SimpleTestCase):
    def test_gradient_and_variational_suites_pass(self):
        results = run_acceptance(['gradient', 'variational'], seed=1)
        failed = [item.name for item in results if not item.passed]
        self.assertEqual(failed, [])


class SweepValidationTests(SimpleTestCase):
    def test_c_list_must_increase(self):
        with self.assertRaises(ValidationError):
            run_sweep(2.5, (8.0, 4.0, 16.0))

    def test_c_list_length(self):
        with self.assertRaises(ValidationError):
            run_sweep(2.5, (8.0, 16.0))

    def test_exponent_range(self):
        with self.assertRaises(ValidationError):
            run_sweep(3.0, C_LIST)

    def test_tau_range(self):
        with self.assertRaises(ValidationError):
            run_sweep(2.5, C_LIST, tau=1.5)

    def test_mass_pairs_checked_before_solving(self):
        grid = GridSpec(n=8, box=3.0, c=5.0, p=2.5)
        for pair in ((0.6, 0.6), (0.0, 0.5), (-0.1, 0.5)):
            with self.subTest(pair=pair):
                with self.assertRaises(ValidationError):
                    energy_scan(grid, (1.0,), mass_pairs=(pair,))

    def test_settings_dict_omits_workers(self):
        settings = SweepSettings(p=2.5, workers=4)
        self.assertNotIn('workers', settings.as_dict())
        self.assertEqual(settings.as_dict()['p'], 2.5)


@tag('slow')
class SmallSweepTests(SimpleTestCase):
    def test_warm_sweep_on_coarse_grid(self):
        with tempfile.TemporaryDirectory() as directory:
            result = run_sweep(
                2.5, (5.0, 10.0, 20.0), n=16, out_dir=directory
            )
            self.assertEqual(
                len(result.records) + len(result.failures), 3
            )
            self.assertEqual(len(result.fields), len(result.records))
            for entry in result.fields:
                self.assertTrue((Path(directory) / entry['path']).exists())
        for record in result.records:
            self.assertLess(record.omega_c, record.c ** 2)
            self.assertGreater(record.gap, 0.0)

    def test_box_refinement_keeps_spacing(self):
        grid = GridSpec(n=16, box=8.0, c=5.0, p=2.5)
        report, record = solve_single(grid)
        self.assertEqual(record.c, 5.0)
        refinement = box_refinement(grid, report)
        self.assertEqual(refinement['n'], 20)
        self.assertAlmostEqual(refinement['box'], 10.0)
        self.assertGreaterEqual(refinement['omega_delta'], 0.0)
        self.assertLess(refinement['energy_delta'], 1.0)

    def test_warm_and_cold_sweeps_agree(self):
        warm = run_sweep(2.5, (5.0, 10.0, 20.0), n=16)
        cold = run_sweep(
            2.5, (5.0, 10.0, 20.0), n=16, warm_start=False, workers=1
        )
        shared = set(warm.reports) & set(cold.reports)
        self.assertTrue(shared)
        for c in shared:
            with self.subTest(c=c):
                self.assertLessEqual(
                    aligned_distance(
                        cold.reports[c].ground_state,
                        warm.reports[c].ground_state,
                    ),
                    1e-4,
                )

    def test_records_carry_outer_iterations(self):
        result = run_sweep(2.5, (5.0, 10.0, 20.0), n=16)
        for record in result.records:
            report = result.reports[record.c]
            self.assertEqual(record.outer_iters, report.iterations)
            self.assertGreater(record.outer_iters, 0)

    def test_energy_scan_is_monotone_and_subadditive(self):
        grid = GridSpec(n=16, box=8.0, c=5.0, p=2.5)
        scan = energy_scan(grid, (0.5, 1.0), mass_pairs=((0.5, 0.5),))
        self.assertTrue(scan.monotone)
        self.assertTrue(scan.subadditive)
        self.assertEqual(len(scan.pair_rows), 1)


@tag('slow')
class DefaultSweepTests(SimpleTestCase):
    def test_default_sweep_meets_every_verdict(self):
        result = run_sweep(2.5, DEFAULT_C_LIST, n=48)
        self.assertEqual(result.failures, [])
        results = sweep_criteria(
            result.records, fit_columns(result.records), result.model
        )
        failed = {
            item.name: item.value for item in results if not item.passed
        }
        self.assertEqual(failed, {})
