from pathlib import Path

from core.constants import DEFAULT_M, DEFAULT_P
from core.validators import validate_exponent
from limit_harness.criteria import limit_model_criteria
from nls_limit.flow import flow_multiplier, nls_ground_flow
from nls_limit.model import (
    build_limit_model,
    limit_grid,
    nse_residual,
    up_mass_from_nu,
)
from nls_limit.radial import export_profile_csv

from ._base import NdgsCommand, default_n


class Command(NdgsCommand):
    help = 'Предельная модель Шрёдингера: U_p, nu, h и e_inf'

    def add_arguments(self, parser):
        parser.add_argument('--p', type=float, default=DEFAULT_P)
        parser.add_argument('--m', type=float, default=DEFAULT_M)
        parser.add_argument('--n', type=int, default=default_n())
        parser.add_argument(
            '--flow', action='store_true',
            help='Сверить nu с нормированным градиентным потоком в 3D',
        )
        parser.add_argument(
            '--out', default=None, help='Каталог для профиля U_p в CSV'
        )

    def run(self, **options):
        validate_exponent(options['p'])
        model = build_limit_model(options['p'], options['m'], n=options['n'])
        self.stdout.write(
            f'||U_p||={model.profile.mass_l2:.12g} nu={model.nu:.12g} '
            f'e_inf={model.e_inf:.12g}'
        )
        flow_mass = None
        if options['flow']:
            grid = limit_grid(
                model.p, model.m, model.nu, n=options['n']
            )
            f, value = nls_ground_flow(grid)
            flow_nu = flow_multiplier(f)
            flow_mass = up_mass_from_nu(model.p, model.m, flow_nu)
            self.stdout.write(
                f'flow: nu={flow_nu:.12g} e_inf={value:.12g} '
                f'||U_p||={flow_mass:.12g}'
            )
        if options['out']:
            out = Path(options['out'])
            out.mkdir(parents=True, exist_ok=True)
            export_profile_csv(model.profile, out / 'profile.csv')
        return self.report_criteria(
            limit_model_criteria(model, nse_residual(model), flow_mass)
        )
