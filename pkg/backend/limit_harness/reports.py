"""CSV tables and JSON summaries of sweeps and solves."""
import csv
import json
import logging
from pathlib import Path

from django.conf import settings as django_settings
from django.core.exceptions import ValidationError
from django.utils import timezone
from jsonschema import Draft202012Validator

from core.constants import (
    CSV_PRECISION,
    EL_RESIDUAL_TARGET,
    POHOZAEV_TARGET,
    RATE_THEORY,
    REPORT_SCHEMA,
)
from limit_harness.criteria import json_value
from limit_harness.records import COLUMNS, SweepRecord
from limit_harness.serializers import ReportSerializer

logger = logging.getLogger(__name__)

CSV_NAME = 'sweep.csv'
JSON_NAME = 'summary.json'


def format_value(value):
    return f'{value:.{CSV_PRECISION}g}'


def write_csv(records, path):
    with open(path, 'w', newline='', encoding='utf-8') as file:
        writer = csv.writer(file)
        writer.writerow(COLUMNS)
        for record in records:
            writer.writerow(format_value(value) for value in record.as_row())


def read_report_csv(path):
    """Records back from a table written by ``write_csv``."""
    with open(path, newline='', encoding='utf-8') as file:
        reader = csv.DictReader(file)
        if tuple(reader.fieldnames or ()) != COLUMNS:
            raise ValidationError('Unexpected CSV header.')
        return [SweepRecord.from_row(row) for row in reader]


def report_status(fits, criteria):
    if not fits or not criteria:
        return 'incomplete'
    if all(item.passed for item in criteria):
        return 'passed'
    return 'failed'


def fit_entry(column, fit):
    return {
        'column': column,
        'slope': fit.slope,
        'intercept': fit.intercept,
        'r_squared': fit.r_squared,
        'prefactor': fit.prefactor,
        'theory': RATE_THEORY.get(column),
        'points': [list(point) for point in fit.points],
    }


def model_entry(model):
    if model is None:
        return None
    return {
        'p': model.p,
        'm': model.m,
        'nu': model.nu,
        'e_inf': model.e_inf,
        'decay_rate': model.decay_rate,
        'up_mass': model.profile.mass_l2,
    }


def default_tolerances(settings):
    return {
        'tol_outer': settings.get('tol_outer'),
        'tol_inner': settings.get('tol_inner'),
        'el_residual': EL_RESIDUAL_TARGET,
        'pohozaev': POHOZAEV_TARGET,
    }


def build_summary(records, fits, criteria=(), settings=None, failures=(),
                  fields=(), model=None, tolerances=None, refinement=None):
    settings = dict(settings or {})
    if tolerances is None:
        tolerances = {
            key: value
            for key, value in default_tolerances(settings).items()
            if value is not None
        }
    summary = {
        'schema': REPORT_SCHEMA,
        'status': report_status(fits, criteria),
        'created': timezone.now().isoformat(),
        'columns': list(COLUMNS),
        'row_count': len(records),
        'settings': settings,
        'tolerances': tolerances,
        'model': model_entry(model),
        'fits': [fit_entry(column, fit) for column, fit in fits.items()],
        'criteria': [item.as_dict() for item in criteria],
        'failures': list(failures),
        'field_files': list(fields),
        'refinement': refinement,
    }
    return _plain_tree(summary)


def _plain_tree(value):
    if isinstance(value, dict):
        return {key: _plain_tree(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain_tree(item) for item in value]
    return json_value(value)


def schema_file():
    return Path(django_settings.NDGS['REPORT_SCHEMA_FILE'])


def schema_errors(summary, path=None):
    """Messages of every violation of the shipped JSON schema."""
    path = Path(path or schema_file())
    schema = json.loads(path.read_text(encoding='utf-8'))
    validator = Draft202012Validator(schema)
    return [
        f'{"/".join(str(part) for part in error.path) or "<root>"}: '
        f'{error.message}'
        for error in sorted(
            validator.iter_errors(summary),
            key=lambda item: [str(part) for part in item.path],
        )
    ]


def validate_summary(summary):
    serializer = ReportSerializer(data=summary)
    if not serializer.is_valid():
        logger.error('Report summary is invalid: %s', serializer.errors)
        raise ValidationError(f'Invalid report summary: {serializer.errors}')
    if not schema_file().exists():
        logger.warning('Report schema %s not found', schema_file())
        return summary
    errors = schema_errors(summary)
    if errors:
        logger.error('Report summary violates the schema: %s', errors)
        raise ValidationError(errors)
    return summary


def emit_report(records, fits, path, criteria=(), settings=None,
                failures=(), fields=(), model=None, refinement=None):
    """Write ``sweep.csv`` and ``summary.json`` into directory ``path``.

    Returns the two file paths and the summary dict.
    """
    if not records:
        raise ValidationError('A report needs at least one record.')
    directory = Path(path)
    directory.mkdir(parents=True, exist_ok=True)
    summary = validate_summary(build_summary(
        records,
        fits,
        criteria=criteria,
        settings=settings,
        failures=failures,
        fields=fields,
        model=model,
        refinement=refinement,
    ))
    csv_path = directory / CSV_NAME
    json_path = directory / JSON_NAME
    write_csv(records, csv_path)
    json_path.write_text(
        json.dumps(summary, indent=2, allow_nan=False), encoding='utf-8'
    )
    logger.info(
        'Report written to %s (status %s)', directory, summary['status']
    )
    return csv_path, json_path, summary
