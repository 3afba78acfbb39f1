from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from dotenv import dotenv_values

from core.constants import DEFAULT_N
from core.exceptions import NdgsError

TRUE_VALUES = ('1', 'true', 'yes', 'on')
CONFIG_SKIP = ('config', 'verbosity', 'settings', 'pythonpath', 'traceback',
               'no_color', 'force_color', 'skip_checks')


def parse_float_list(value):
    return tuple(float(item) for item in value.split(',') if item.strip())


def parse_mass_pairs(value):
    """'0.3:0.5,0.5:0.5' -> ((0.3, 0.5), (0.5, 0.5))."""
    pairs = []
    for item in value.split(','):
        if not item.strip():
            continue
        first, second = item.split(':')
        pairs.append((float(first), float(second)))
    return tuple(pairs)


def default_output_dir():
    return getattr(settings, 'NDGS', {}).get('OUTPUT_DIR', 'output')


def default_n():
    return getattr(settings, 'NDGS', {}).get('DEFAULT_N', DEFAULT_N)


class NdgsCommand(BaseCommand):
    """Shared plumbing: ``--config`` overrides and exit codes.

    Failures leave with return code 1, failed verdicts with 2.
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.add_argument(
            '--config',
            default=None,
            help='Файл key=value, значения которого заменяют флаги',
        )
        self.option_actions = {
            action.dest: action for action in parser._actions
        }
        return parser

    def coerce(self, dest, raw):
        action = self.option_actions.get(dest)
        if action is None:
            raise CommandError(
                f'Unknown key in config: {dest!r}', returncode=1
            )
        if raw is None:
            return action.const if action.nargs == 0 else None
        if action.nargs == 0:
            return raw.strip().lower() in TRUE_VALUES
        convert = action.type or str
        try:
            if action.nargs in ('+', '*'):
                return [convert(item.strip()) for item in raw.split(',')]
            return convert(raw)
        except ValueError as error:
            raise CommandError(
                f'Bad value for {dest!r} in config: {raw!r}', returncode=1
            ) from error

    def apply_config(self, options):
        path = options.get('config')
        if not path:
            return options
        values = dotenv_values(path)
        overrides = {
            key.replace('-', '_'): raw
            for key, raw in values.items()
            if key.replace('-', '_') not in CONFIG_SKIP
        }
        return {
            **options,
            **{
                dest: self.coerce(dest, raw)
                for dest, raw in overrides.items()
            },
        }

    def handle(self, *args, **options):
        try:
            options = self.apply_config(options)
            passed = self.run(**options)
        except (NdgsError, ValidationError) as error:
            raise CommandError(str(error), returncode=1) from error
        if passed is False:
            raise CommandError('Acceptance criteria failed.', returncode=2)

    def run(self, **options):
        raise NotImplementedError

    def report_criteria(self, criteria):
        for item in criteria:
            style = self.style.SUCCESS if item.passed else self.style.ERROR
            self.stdout.write(style(
                f'{item.name}: {"OK" if item.passed else "FAIL"} '
                f'(value={item.value}, threshold={item.threshold})'
            ))
        return all(item.passed for item in criteria)
