from pathlib import Path

from core.constants import (
    DEFAULT_C_LIST,
    DEFAULT_M,
    DEFAULT_P,
    DEFAULT_TAU,
    TOL_INNER,
    TOL_OUTER,
)
from core.exceptions import SweepFailed
from limit_harness.catalog import persist_run
from limit_harness.criteria import limit_model_criteria, sweep_criteria
from limit_harness.fitting import fit_columns
from limit_harness.models import SweepRun
from limit_harness.reports import emit_report
from limit_harness.sweep import SweepSettings, run_sweep
from nls_limit.model import nse_residual

from ._base import (
    NdgsCommand,
    default_n,
    default_output_dir,
    parse_float_list,
)


class Command(NdgsCommand):
    help = 'Серия решений по c и оценки скоростей нерелятивистского предела'

    def add_arguments(self, parser):
        parser.add_argument('--p', type=float, default=DEFAULT_P)
        parser.add_argument('--m', type=float, default=DEFAULT_M)
        parser.add_argument(
            '--c', type=parse_float_list, default=DEFAULT_C_LIST,
            help='Возрастающий список c через запятую',
        )
        parser.add_argument('--tau', type=float, default=DEFAULT_TAU)
        parser.add_argument('--n', type=int, default=default_n())
        parser.add_argument('--box', type=float, default=None)
        parser.add_argument('--tol-outer', type=float, default=TOL_OUTER)
        parser.add_argument('--tol-inner', type=float, default=TOL_INNER)
        parser.add_argument(
            '--cold', action='store_true',
            help='Каждая точка стартует с предельного профиля, параллельно',
        )
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--out', default=None)
        parser.add_argument('--no-catalog', action='store_true')

    def run(self, **options):
        sweep_settings = SweepSettings(
            p=options['p'],
            m=options['m'],
            tau=options['tau'],
            n=options['n'],
            box=options['box'],
            tol_outer=options['tol_outer'],
            tol_inner=options['tol_inner'],
            warm_start=not options['cold'],
            workers=options['workers'],
        )
        out = Path(options['out'] or default_output_dir())
        out.mkdir(parents=True, exist_ok=True)
        try:
            result = run_sweep(
                options['p'], options['c'], sweep_settings, out_dir=out
            )
        except SweepFailed as error:
            for failure in error.failures:
                self.stderr.write(f'c={failure["c"]:g}: {failure["error"]}')
            raise
        for record in result.records:
            self.stdout.write(
                f'c={record.c:g}: gap={record.gap:.10g} '
                f'|g|={record.g_norm_s0:.3e} |u-|={record.neg_l2:.3e}'
            )
        fits = fit_columns(result.records)
        criteria = limit_model_criteria(
            result.model, nse_residual(result.model)
        ) + sweep_criteria(result.records, fits, result.model)
        passed = self.report_criteria(criteria)
        settings = {
            **sweep_settings.as_dict(),
            'box': result.grid.box,
            'c': list(result.c_list),
        }
        csv_path, json_path, summary = emit_report(
            result.records, fits, out, criteria=criteria, settings=settings,
            failures=result.failures, fields=result.fields,
            model=result.model,
        )
        if not options['no_catalog']:
            persist_run(
                SweepRun.Kind.SWEEP, result.grid, result.records, summary,
                csv_path, json_path,
            )
        self.stdout.write(self.style.SUCCESS(f'Отчёт записан в {out}'))
        return passed
