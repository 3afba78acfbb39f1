# Generated by Django 5.0.6 on 2026-10-17 14:40

from django.db import migrations, models


class Migration(migrations.Migration):

    dependencies = [
        ('limit_harness', '0001_initial'),
    ]

    operations = [
        migrations.AddField(
            model_name='sweeppoint',
            name='outer_iters',
            field=models.PositiveIntegerField(null=True, verbose_name='Итераций внешнего спуска'),
        ),
    ]
