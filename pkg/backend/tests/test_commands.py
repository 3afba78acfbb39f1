import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings, tag

from limit_harness.management.commands._base import (
    parse_float_list,
    parse_mass_pairs,
)
from limit_harness.management.commands.solve import Command as SolveCommand
from limit_harness.management.commands.sweep import Command as SweepCommand
from limit_harness.management.commands.acceptance import (
    Command as AcceptanceCommand,
)
from limit_harness.models import SweepRun
from ndgs.cli import ALIASES


class ConfigFileTests(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / 'run.env'
        self.command = AcceptanceCommand()
        self.command.create_parser('manage.py', 'acceptance')

    def tearDown(self):
        self.directory.cleanup()

    def test_values_are_coerced(self):
        self.path.write_text(
            'seed=7\nsuite=algebra,persistence\n', encoding='utf-8'
        )
        options = self.command.apply_config(
            {'config': str(self.path), 'seed': 0, 'suite': None}
        )
        self.assertEqual(options['seed'], 7)
        self.assertEqual(options['suite'], ['algebra', 'persistence'])

    def test_unknown_key(self):
        self.path.write_text('bogus=1\n', encoding='utf-8')
        with self.assertRaises(CommandError) as raised:
            self.command.apply_config({'config': str(self.path)})
        self.assertEqual(raised.exception.returncode, 1)

    def test_bad_value(self):
        self.path.write_text('seed=seven\n', encoding='utf-8')
        with self.assertRaises(CommandError):
            self.command.apply_config({'config': str(self.path)})

    def test_no_config_keeps_options(self):
        options = {'config': None, 'seed': 3}
        self.assertIs(self.command.apply_config(options), options)


class HelpersTests(SimpleTestCase):
    def test_float_list(self):
        self.assertEqual(parse_float_list('8, 16,32,'), (8.0, 16.0, 32.0))
        with self.assertRaises(ValueError):
            parse_float_list('8,x')

    def test_mass_pairs(self):
        self.assertEqual(
            parse_mass_pairs('0.3:0.5, 0.5:0.5,'), ((0.3, 0.5), (0.5, 0.5))
        )
        for bad in ('0.5', '0.1:0.2:0.3', 'a:b'):
            with self.subTest(value=bad):
                with self.assertRaises(ValueError):
                    parse_mass_pairs(bad)

    def test_check_alias(self):
        self.assertEqual(ALIASES['check'], 'acceptance')

    @override_settings(NDGS={'DEFAULT_N': 24, 'OUTPUT_DIR': 'out'})
    def test_resolution_default_from_settings(self):
        for command, name in ((SolveCommand(), 'solve'),
                              (SweepCommand(), 'sweep')):
            with self.subTest(command=name):
                parser = command.create_parser('manage.py', name)
                self.assertEqual(parser.get_default('n'), 24)


class AcceptanceCommandTests(SimpleTestCase):
    def test_persistence_suite(self):
        out = StringIO()
        call_command('acceptance', suite=['persistence'], stdout=out)
        self.assertIn('field_round_trip: OK', out.getvalue())
        self.assertIn('csv_round_trip: OK', out.getvalue())


class SolveCommandTests(TestCase):
    def test_exponent_outside_range(self):
        with self.assertRaises(CommandError) as raised:
            call_command(
                'solve', p=1.5, no_catalog=True, stdout=StringIO()
            )
        self.assertEqual(raised.exception.returncode, 1)
        self.assertFalse(SweepRun.objects.exists())

    def test_sweep_needs_three_speeds(self):
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(CommandError) as raised:
                call_command(
                    'sweep', c=(8.0, 16.0), out=directory, no_catalog=True,
                    stdout=StringIO(),
                )
        self.assertEqual(raised.exception.returncode, 1)


@tag('slow')
class LimitModelCommandTests(SimpleTestCase):
    def test_profile_export_and_verdicts(self):
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            call_command('nls', p=2.5, out=directory, stdout=out)
            self.assertTrue((Path(directory) / 'profile.csv').exists())
        self.assertIn('nse_residual: OK', out.getvalue())
        self.assertIn('e_inf_negative: OK', out.getvalue())
