"""Catalog rows for finished runs."""
import logging

from django.db import DatabaseError, transaction

from limit_harness.models import SweepPoint, SweepRun

logger = logging.getLogger(__name__)


def persist_run(kind, grid, records, summary, csv_path='', json_path=''):
    """Store a run and its points; returns None if the database is
    unavailable."""
    try:
        with transaction.atomic():
            run = SweepRun.objects.create(
                kind=kind,
                p=grid.p,
                m=grid.m,
                tau=grid.tau,
                n=grid.n,
                box=grid.box,
                status=summary.get('status', SweepRun.Status.INCOMPLETE),
                csv_path=str(csv_path),
                json_path=str(json_path),
                summary=summary,
            )
            SweepPoint.objects.bulk_create(
                SweepPoint(run=run, **record.as_model_fields())
                for record in records
            )
    except DatabaseError as error:
        logger.error('Catalog write failed: %s', error)
        return None
    logger.info('Catalogued %s run %d with %d points',
                kind, run.pk, len(records))
    return run
