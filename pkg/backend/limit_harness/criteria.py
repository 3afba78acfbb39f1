"""Pass/fail verdicts written into the JSON summary."""
import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from core.constants import (
    CROSS_OMEGA_TOL,
    CROSS_SOLVER_TOL,
    DECAY_DELTA_SLACK,
    DECAY_RATIO_SLOPE,
    EL_RESIDUAL_TARGET,
    FLOW_MASS_TOL,
    G_H15_SLOPE,
    G_L2_SLOPE,
    GAP_NU_TOL,
    H2_RATIO_MAX,
    H_MASS_TOL,
    NEG_L2_SLOPE,
    NSE_RESIDUAL_TOL,
    ORBIT_DIST_MAX,
    POHOZAEV_TARGET,
)
from spectral_core.norms import l2_norm


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    value: Any
    threshold: Any
    detail: str = ''

    def as_dict(self):
        data = asdict(self)
        for key in ('value', 'threshold'):
            data[key] = json_value(data[key])
        return data


def json_value(value):
    if isinstance(value, (tuple, list)):
        return [json_value(item) for item in value]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return None if not math.isfinite(value) else value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def within(name, value, bounds, detail=''):
    low, high = bounds
    return CriterionResult(
        name, bool(low <= value <= high), value, list(bounds), detail
    )


def at_most(name, value, limit, detail=''):
    return CriterionResult(name, bool(value <= limit), value, limit, detail)


def sweep_criteria(records, fits, model):
    """Rate, gap, orbit, regularity and decay verdicts of a c-sweep.

    The lower-spinor mass and H^{1.5} norm only have to decay at least as
    fast as their bounds; the remaining slopes are checked in a window.
    """
    results = []
    for column, bounds, one_sided in (
        ('g_norm_s0', G_L2_SLOPE, False),
        ('neg_l2', NEG_L2_SLOPE, True),
        ('g_norm_s1_5', G_H15_SLOPE, True),
        ('decay_ratio_minus', DECAY_RATIO_SLOPE, False),
    ):
        fit = fits.get(column)
        if fit is None:
            results.append(CriterionResult(
                f'{column}_slope', False, None, list(bounds), 'fit missing'
            ))
            continue
        if one_sided:
            results.append(at_most(
                f'{column}_slope', fit.slope, bounds[1], 'one-sided'
            ))
        else:
            results.append(within(f'{column}_slope', fit.slope, bounds))
    last = records[-1]
    gap_defect = abs(last.gap / model.nu - 1.0)
    results.append(at_most(
        'gap_to_nu', gap_defect, GAP_NU_TOL, f'c={last.c:g}'
    ))
    distances = [record.orbit_dist for record in records]
    decreasing = all(b < a for a, b in zip(distances, distances[1:]))
    results.append(CriterionResult(
        'orbit_dist_decreasing', decreasing, distances, 'strict'
    ))
    results.append(at_most(
        'orbit_dist_final', last.orbit_dist, ORBIT_DIST_MAX, f'c={last.c:g}'
    ))
    h2 = [record.h2_norm for record in records]
    results.append(at_most('h2_ratio', max(h2) / min(h2), H2_RATIO_MAX))
    limit = DECAY_DELTA_SLACK * model.decay_rate
    delta = last.decay_delta_plus
    results.append(CriterionResult(
        'decay_delta_plus',
        bool(math.isfinite(delta) and 0 < delta < limit),
        delta,
        [0.0, limit],
        f'c={last.c:g}',
    ))
    return results


def solve_criteria(report, scf_report=None, distance=None):
    """Single-solve verdicts in units of mc^2."""
    rest = report.grid.rest_energy
    results = [
        at_most(
            'el_residual', report.el_residual / rest, EL_RESIDUAL_TARGET
        ),
        within('omega_in_gap', report.omega / rest, (0.0, 1.0)),
        within('energy_in_range', report.energy / rest, (0.0, 1.0)),
        at_most('pohozaev', abs(report.pohozaev) / rest, POHOZAEV_TARGET),
    ]
    if scf_report is not None:
        results.append(at_most('scf_distance', distance, CROSS_SOLVER_TOL))
        results.append(at_most(
            'scf_omega',
            abs(scf_report.omega - report.omega) / rest,
            CROSS_OMEGA_TOL,
        ))
    return results


def limit_model_criteria(model, residual, flow_mass=None):
    results = [
        at_most('h_mass', abs(l2_norm(model.h) - 1.0), H_MASS_TOL),
        at_most('nse_residual', residual, NSE_RESIDUAL_TOL),
        CriterionResult(
            'e_inf_negative', bool(model.e_inf < 0), model.e_inf, 0.0
        ),
    ]
    if flow_mass is not None:
        results.append(at_most(
            'flow_mass',
            abs(flow_mass / model.profile.mass_l2 - 1.0),
            FLOW_MASS_TOL,
        ))
    return results


def scan_criteria(scan):
    """Verdicts of an energy scan: e_c decreasing in tau, E_c subadditive."""
    results = []
    if len(scan.rows) >= 2:
        results.append(CriterionResult(
            'energy_monotone', bool(scan.monotone),
            [row[1] for row in scan.rows], 'strict',
        ))
    if scan.subadditive is not None:
        results.append(CriterionResult(
            'energy_subadditive', bool(scan.subadditive),
            [list(row[2:]) for row in scan.pair_rows], 'joint < split',
        ))
    return results
