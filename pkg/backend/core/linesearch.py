"""Backtracking line search shared by the ascent and descent loops."""
import logging
from dataclasses import dataclass
from typing import Any

from core.constants import ARMIJO, MIN_STEP, SHRINK

logger = logging.getLogger(__name__)


@dataclass
class Step:
    accepted: bool
    step: float
    point: Any
    value: float
    payload: Any = None


def backtrack(trial, value, slope, step, maximize=False,
              armijo=ARMIJO, shrink=SHRINK, min_step=MIN_STEP, noise=0.0):
    """Shrink ``step`` until the Armijo condition holds.

    ``trial(step)`` returns ``(point, value, payload)``. ``slope`` is the
    directional derivative at step zero: positive when maximizing,
    negative when minimizing. ``noise`` is the roundoff level of the
    objective; the sufficient-change test is relaxed by it.
    """
    sign = 1.0 if maximize else -1.0
    best = None
    while step >= min_step:
        point, new_value, payload = trial(step)
        gain = sign * (new_value - value)
        if gain >= armijo * step * sign * slope - noise:
            return Step(True, step, point, new_value, payload)
        if best is None or sign * (new_value - best.value) > 0:
            best = Step(False, step, point, new_value, payload)
        step *= shrink
    logger.debug('Line search exhausted at step %.3e', step / shrink)
    if best is None:
        return Step(False, 0.0, None, value)
    return best
