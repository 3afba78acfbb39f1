from pathlib import Path

from core.constants import (
    DEFAULT_M,
    DEFAULT_P,
    DEFAULT_TAU,
    TOL_INNER,
    TOL_OUTER,
)
from limit_harness.catalog import persist_run
from limit_harness.criteria import scan_criteria, solve_criteria
from limit_harness.models import SweepRun
from limit_harness.persistence import save_field
from limit_harness.reports import emit_report
from limit_harness.sweep import box_refinement, energy_scan, solve_single
from maxmin_solver.alignment import aligned_distance
from maxmin_solver.outer import Seed, seed_direction
from maxmin_solver.scf import scf_oracle
from nls_limit.model import build_limit_model, limit_grid

from ._base import (
    NdgsCommand,
    default_n,
    default_output_dir,
    parse_float_list,
    parse_mass_pairs,
)


class Command(NdgsCommand):
    help = 'Основное состояние нелинейного уравнения Дирака при заданном c'

    def add_arguments(self, parser):
        parser.add_argument('--p', type=float, default=DEFAULT_P)
        parser.add_argument('--m', type=float, default=DEFAULT_M)
        parser.add_argument('--c', type=float, default=20.0)
        parser.add_argument('--tau', type=float, default=DEFAULT_TAU)
        parser.add_argument('--n', type=int, default=default_n())
        parser.add_argument(
            '--box', type=float, default=None,
            help='Полуширина ящика L; по умолчанию из nu предельной модели',
        )
        parser.add_argument(
            '--init', choices=[seed.value for seed in Seed],
            default=Seed.FW_GAUSSIAN.value,
        )
        parser.add_argument('--tol-outer', type=float, default=TOL_OUTER)
        parser.add_argument('--tol-inner', type=float, default=TOL_INNER)
        parser.add_argument(
            '--scf', action='store_true',
            help='Сравнить с решением итерации самосогласования',
        )
        parser.add_argument(
            '--scan', type=parse_float_list, default=None,
            help='Значения tau через запятую для проверки монотонности e_c',
        )
        parser.add_argument(
            '--mass-pairs', type=parse_mass_pairs, default=None,
            help='Пары масс a1:a2 через запятую для проверки '
                 'строгой субаддитивности E_c',
        )
        parser.add_argument(
            '--box-check', action='store_true',
            help='Повторить расчёт в ящике в 1.25 раза больше при том же шаге',
        )
        parser.add_argument('--out', default=None)
        parser.add_argument('--no-catalog', action='store_true')

    def run(self, **options):
        model = build_limit_model(options['p'], options['m'])
        grid = limit_grid(
            options['p'], options['m'], model.nu, n=options['n'],
            c=options['c'], tau=options['tau'],
        )
        if options['box'] is not None:
            grid = grid.replace(box=options['box'])
        report, record = solve_single(
            grid,
            init=Seed(options['init']),
            tol_outer=options['tol_outer'],
            tol_inner=options['tol_inner'],
            model=model,
        )
        self.stdout.write(
            f'c={grid.c:g}: omega={report.omega:.12g} '
            f'e={report.energy:.12g} iterations={report.iterations}'
        )
        scf_report = distance = None
        if options['scf']:
            scf_report = scf_oracle(
                grid, seed_direction(grid, Seed.FW_GAUSSIAN, model=model)
            )
            distance = aligned_distance(
                scf_report.ground_state, report.ground_state
            )
        criteria = solve_criteria(report, scf_report, distance)
        if options['scan'] or options['mass_pairs']:
            scan = energy_scan(
                grid, options['scan'] or (),
                mass_pairs=options['mass_pairs'] or (), model=model,
                tol_outer=options['tol_outer'],
                tol_inner=options['tol_inner'],
            )
            for tau, e, scaled in scan.rows:
                self.stdout.write(
                    f'tau={tau:g}: e_c={e:.12g} E_c={scaled:.12g}'
                )
            criteria.extend(scan_criteria(scan))
        refinement = None
        if options['box_check']:
            refinement = box_refinement(
                grid, report, model=model,
                tol_outer=options['tol_outer'],
                tol_inner=options['tol_inner'],
            )
            self.stdout.write(
                f'box {grid.box:g} -> {refinement["box"]:g}: '
                f'|d omega|={refinement["omega_delta"]:.3e} '
                f'|d e|={refinement["energy_delta"]:.3e} (mc^2)'
            )
        passed = self.report_criteria(criteria)
        out = Path(options['out'] or default_output_dir())
        out.mkdir(parents=True, exist_ok=True)
        digest = save_field(report.ground_state, out / 'u.ndgs')
        settings = {
            'p': grid.p, 'm': grid.m, 'c': grid.c, 'tau': grid.tau,
            'n': grid.n, 'box': grid.box, 'init': options['init'],
            'tol_outer': options['tol_outer'],
            'tol_inner': options['tol_inner'],
        }
        csv_path, json_path, summary = emit_report(
            [record], {}, out, criteria=criteria, settings=settings,
            fields=[{'path': 'u.ndgs', 'sha256': digest}], model=model,
            refinement=refinement,
        )
        if not options['no_catalog']:
            persist_run(
                SweepRun.Kind.SOLVE, grid, [record], summary,
                csv_path, json_path,
            )
        self.stdout.write(self.style.SUCCESS(f'Отчёт записан в {out}'))
        return passed
