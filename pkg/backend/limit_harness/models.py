from django.db import models

from core.constants import KIND_MAX_LENGTH, PATH_MAX_LENGTH, STATUS_MAX_LENGTH
from limit_harness.records import COLUMNS


class SweepRun(models.Model):
    class Kind(models.TextChoices):
        SWEEP = 'sweep', 'Серия по c'
        SOLVE = 'solve', 'Одиночное решение'

    class Status(models.TextChoices):
        PASSED = 'passed', 'Пройдено'
        FAILED = 'failed', 'Не пройдено'
        INCOMPLETE = 'incomplete', 'Неполный'

    kind = models.CharField(
        max_length=KIND_MAX_LENGTH,
        choices=Kind.choices,
        default=Kind.SWEEP,
        verbose_name='Тип запуска',
    )
    p = models.FloatField(verbose_name='Показатель p')
    m = models.FloatField(verbose_name='Масса m')
    tau = models.FloatField(verbose_name='tau')
    n = models.PositiveIntegerField(verbose_name='Узлов на ось')
    box = models.FloatField(verbose_name='Полуширина ящика L')
    status = models.CharField(
        max_length=STATUS_MAX_LENGTH,
        choices=Status.choices,
        default=Status.INCOMPLETE,
        verbose_name='Статус',
    )
    created = models.DateTimeField(
        auto_now_add=True, verbose_name='Дата запуска'
    )
    csv_path = models.CharField(
        max_length=PATH_MAX_LENGTH, blank=True, verbose_name='Таблица CSV'
    )
    json_path = models.CharField(
        max_length=PATH_MAX_LENGTH, blank=True, verbose_name='Сводка JSON'
    )
    summary = models.JSONField(default=dict, verbose_name='Сводка')

    class Meta:
        verbose_name = 'Запуск'
        verbose_name_plural = 'Запуски'
        ordering = ['-created']

    def __str__(self):
        return f'{self.get_kind_display()} p={self.p:g} ({self.status})'


class SweepPoint(models.Model):
    run = models.ForeignKey(
        SweepRun,
        on_delete=models.CASCADE,
        related_name='points',
        verbose_name='Запуск',
    )
    c = models.FloatField(verbose_name='Скорость света c')
    omega_c = models.FloatField(null=True, verbose_name='Множитель omega_c')
    gap = models.FloatField(null=True, verbose_name='Зазор mc^2 - omega_c')
    e_c = models.FloatField(null=True, verbose_name='Энергия e_c')
    g_norm_s0 = models.FloatField(null=True, verbose_name='|g|_L2')
    g_norm_s1 = models.FloatField(null=True, verbose_name='|g|_H1')
    g_norm_s1_5 = models.FloatField(null=True, verbose_name='|g|_H1.5')
    g_norm_s2 = models.FloatField(null=True, verbose_name='|g|_H2')
    neg_l2 = models.FloatField(null=True, verbose_name='|u^-|_L2')
    neg_grad_l2 = models.FloatField(null=True, verbose_name='|grad u^-|_L2')
    orbit_dist = models.FloatField(
        null=True, verbose_name='Расстояние до орбиты'
    )
    pohozaev = models.FloatField(null=True, verbose_name='Невязка Похожаева')
    el_residual = models.FloatField(
        null=True, verbose_name='Невязка уравнения'
    )
    decay_delta_plus = models.FloatField(
        null=True, verbose_name='Скорость убывания f'
    )
    decay_ratio_minus = models.FloatField(
        null=True, verbose_name='Отношение амплитуд g/f'
    )
    h2_norm = models.FloatField(null=True, verbose_name='|u|_H2')
    wall_time = models.FloatField(null=True, verbose_name='Время, с')
    energy_defect = models.FloatField(
        null=True, verbose_name='Дефект энергии'
    )
    closure_residual = models.FloatField(
        null=True, verbose_name='Невязка замыкания'
    )
    outer_iters = models.PositiveIntegerField(
        null=True, verbose_name='Итераций внешнего спуска'
    )

    class Meta:
        verbose_name = 'Точка серии'
        verbose_name_plural = 'Точки серии'
        ordering = ['run', 'c']
        constraints = [
            models.UniqueConstraint(
                fields=['run', 'c'], name='unique_run_c'
            )
        ]

    def __str__(self):
        return f'c={self.c:g}'

    def as_row(self):
        return tuple(getattr(self, name) for name in COLUMNS)
