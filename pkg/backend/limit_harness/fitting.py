"""Least-squares rate and decay fits."""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from django.core.exceptions import ValidationError

from core.constants import (
    DECAY_BINS,
    DECAY_MIN_EFOLDINGS,
    DECAY_WINDOW,
    MIN_FIT_POINTS,
    RATE_THEORY,
)
from core.exceptions import TailTooShort

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RateFit:
    slope: float
    intercept: float
    r_squared: float
    points: tuple

    @property
    def prefactor(self):
        return float(np.exp(self.intercept))


def _line_fit(x, y):
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    predicted = design @ np.array([slope, intercept])
    total = float(np.sum((y - np.mean(y)) ** 2))
    residual = float(np.sum((y - predicted) ** 2))
    r_squared = 1.0 if total == 0 else 1.0 - residual / total
    return float(slope), float(intercept), min(max(r_squared, 0.0), 1.0)


def fit_rate(pairs):
    """Fit value = C c^slope by least squares in log-log coordinates."""
    pairs = [(float(c), float(value)) for c, value in pairs]
    if len(pairs) < MIN_FIT_POINTS:
        raise ValidationError(
            f'A rate fit needs at least {MIN_FIT_POINTS} points, '
            f'got {len(pairs)}.'
        )
    if any(not c > 0 or not value > 0 for c, value in pairs):
        raise ValidationError('Rate fits need positive c and values.')
    x = np.log([c for c, _ in pairs])
    y = np.log([value for _, value in pairs])
    slope, intercept, r_squared = _line_fit(x, y)
    return RateFit(
        slope=slope,
        intercept=intercept,
        r_squared=r_squared,
        points=tuple(zip(x.tolist(), y.tolist())),
    )


def fit_columns(records, columns=None):
    """Rate fits of the named record columns against c.

    Columns with non-positive or missing entries are skipped.
    """
    columns = RATE_THEORY if columns is None else columns
    fits = {}
    for name in columns:
        pairs = [(record.c, getattr(record, name)) for record in records]
        try:
            fits[name] = fit_rate(pairs)
        except ValidationError as error:
            logger.debug('Skipping fit of %s: %s', name, error.messages[0])
    return fits


class Component(str, Enum):
    UPPER = 'upper'
    LOWER = 'lower'


@dataclass(frozen=True)
class DecayFit:
    delta: float
    prefactor: float
    efoldings: float


def fit_decay(u, component, window=DECAY_WINDOW, bins=DECAY_BINS,
              yukawa=True):
    """Exponential decay rate of the upper or lower pair of ``u``.

    Nodes with |x| in [window[0] L, window[1] L] are binned in |x| and
    |component| is averaged per shell. With ``yukawa`` the shell means
    are weighted by |x|, so a tail A e^{-delta r} / r fits as a line.
    The negated slope of log(mean) against the mean radius is delta.
    """
    pair = u.upper() if Component(component) is Component.UPPER else (
        u.lower()
    )
    grid = u.grid
    radius = grid.radius().ravel()
    modulus = pair.modulus().ravel()
    r_lo, r_hi = window[0] * grid.box, window[1] * grid.box
    mask = (radius >= r_lo) & (radius <= r_hi)
    radius, modulus = radius[mask], modulus[mask]
    if yukawa:
        modulus = radius * modulus
    edges = np.linspace(r_lo, r_hi, bins + 1)
    index = np.clip(np.digitize(radius, edges) - 1, 0, bins - 1)
    counts = np.bincount(index, minlength=bins)
    totals = np.bincount(index, modulus, bins)
    filled = (counts > 0) & (totals > 0)
    if np.count_nonzero(filled) < 2:
        raise TailTooShort('Decay window holds fewer than two shells.')
    mean_r = np.bincount(index, radius, bins)[filled] / counts[filled]
    mean_log = np.log(totals[filled] / counts[filled])
    efoldings = float(mean_log.max() - mean_log.min())
    if efoldings < DECAY_MIN_EFOLDINGS:
        raise TailTooShort(
            f'Tail spans {efoldings:.2f} e-foldings, '
            f'{DECAY_MIN_EFOLDINGS} are required.'
        )
    slope, intercept, _ = _line_fit(mean_r, mean_log)
    return DecayFit(
        delta=-slope, prefactor=float(np.exp(intercept)), efoldings=efoldings
    )
