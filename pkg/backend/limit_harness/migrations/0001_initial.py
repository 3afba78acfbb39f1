# Generated by Django 5.0.6 on 2026-10-17 09:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SweepRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('kind', models.CharField(choices=[('sweep', 'Серия по c'), ('solve', 'Одиночное решение')], default='sweep', max_length=16, verbose_name='Тип запуска')),
                ('p', models.FloatField(verbose_name='Показатель p')),
                ('m', models.FloatField(verbose_name='Масса m')),
                ('tau', models.FloatField(verbose_name='tau')),
                ('n', models.PositiveIntegerField(verbose_name='Узлов на ось')),
                ('box', models.FloatField(verbose_name='Полуширина ящика L')),
                ('status', models.CharField(choices=[('passed', 'Пройдено'), ('failed', 'Не пройдено'), ('incomplete', 'Неполный')], default='incomplete', max_length=16, verbose_name='Статус')),
                ('created', models.DateTimeField(auto_now_add=True, verbose_name='Дата запуска')),
                ('csv_path', models.CharField(blank=True, max_length=512, verbose_name='Таблица CSV')),
                ('json_path', models.CharField(blank=True, max_length=512, verbose_name='Сводка JSON')),
                ('summary', models.JSONField(default=dict, verbose_name='Сводка')),
            ],
            options={
                'verbose_name': 'Запуск',
                'verbose_name_plural': 'Запуски',
                'ordering': ['-created'],
            },
        ),
        migrations.CreateModel(
            name='SweepPoint',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('c', models.FloatField(verbose_name='Скорость света c')),
                ('omega_c', models.FloatField(null=True, verbose_name='Множитель omega_c')),
                ('gap', models.FloatField(null=True, verbose_name='Зазор mc^2 - omega_c')),
                ('e_c', models.FloatField(null=True, verbose_name='Энергия e_c')),
                ('g_norm_s0', models.FloatField(null=True, verbose_name='|g|_L2')),
                ('g_norm_s1', models.FloatField(null=True, verbose_name='|g|_H1')),
                ('g_norm_s1_5', models.FloatField(null=True, verbose_name='|g|_H1.5')),
                ('g_norm_s2', models.FloatField(null=True, verbose_name='|g|_H2')),
                ('neg_l2', models.FloatField(null=True, verbose_name='|u^-|_L2')),
                ('neg_grad_l2', models.FloatField(null=True, verbose_name='|grad u^-|_L2')),
                ('orbit_dist', models.FloatField(null=True, verbose_name='Расстояние до орбиты')),
                ('pohozaev', models.FloatField(null=True, verbose_name='Невязка Похожаева')),
                ('el_residual', models.FloatField(null=True, verbose_name='Невязка уравнения')),
                ('decay_delta_plus', models.FloatField(null=True, verbose_name='Скорость убывания f')),
                ('decay_ratio_minus', models.FloatField(null=True, verbose_name='Отношение амплитуд g/f')),
                ('h2_norm', models.FloatField(null=True, verbose_name='|u|_H2')),
                ('wall_time', models.FloatField(null=True, verbose_name='Время, с')),
                ('energy_defect', models.FloatField(null=True, verbose_name='Дефект энергии')),
                ('closure_residual', models.FloatField(null=True, verbose_name='Невязка замыкания')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='points', to='limit_harness.sweeprun', verbose_name='Запуск')),
            ],
            options={
                'verbose_name': 'Точка серии',
                'verbose_name_plural': 'Точки серии',
                'ordering': ['run', 'c'],
                'constraints': [models.UniqueConstraint(fields=('run', 'c'), name='unique_run_c')],
            },
        ),
    ]
