from limit_harness.acceptance import Suite, run_acceptance

from ._base import NdgsCommand


class Command(NdgsCommand):
    help = (
        'Проверки алгебры операторов, градиентов, вариационной структуры '
        'и форматов файлов'
    )

    def add_arguments(self, parser):
        parser.add_argument(
            '--suite',
            nargs='+',
            choices=[suite.value for suite in Suite],
            default=None,
            help='Набор проверок; можно повторять, по умолчанию все',
        )
        parser.add_argument('--seed', type=int, default=0)

    def run(self, **options):
        return self.report_criteria(
            run_acceptance(options['suite'], seed=options['seed'])
        )
