"""Desk-scale property suites run by ``ndgs check``."""
import logging
import tempfile
from enum import Enum
from pathlib import Path

import numpy as np

from core.constants import (
    ALGEBRA_N,
    ALGEBRA_SAMPLES,
    ALGEBRA_TOL,
    DEFAULT_P,
    DUALITY_TOL,
    GRADIENT_N,
    GRADIENT_SAMPLES,
    GRADIENT_STEP,
    GRADIENT_TOL,
    RESTART_TOL,
    VARIATIONAL_SAMPLES,
)
from core.exceptions import FieldFormatError, TruncatedPayload
from functionals.constraints import tau_c_duality_check
from functionals.energy import energy, l2_gradient
from limit_harness.criteria import CriterionResult, at_most
from limit_harness.persistence import decode_field, encode_field
from limit_harness.records import COLUMNS, SweepRecord
from limit_harness.reports import read_report_csv, write_csv
from maxmin_solver.alignment import align_phase
from maxmin_solver.inner import inner_maximize
from maxmin_solver.outer import envelope_gradient
from spectral_core.fields import SpinorField, gaussian_spinor
from spectral_core.grid import GridSpec, multipliers
from spectral_core.norms import (
    c_norm_sq,
    h_half_distance,
    inner,
    l2_norm,
    normalize,
    spectral_l2_norm,
    weighted_norm_sq,
)
from spectral_core.operators import (
    Direction,
    Sign,
    apply_abs_dirac,
    apply_dirac,
    fw_transform,
    project,
)

logger = logging.getLogger(__name__)

ALGEBRA_SPEEDS = (1.0, 5.0, 20.0)
GRADIENT_INNER_TOL = 1e-10
VARIATIONAL_SLACK = 1e-8


class Suite(str, Enum):
    ALGEBRA = 'algebra'
    GRADIENT = 'gradient'
    VARIATIONAL = 'variational'
    PERSISTENCE = 'persistence'


def random_spinor(grid, rng, bandwidth=0.25):
    """Smooth normalized random spinor: Gaussian-damped random spectrum
    with cut-off ``bandwidth`` times the Nyquist frequency."""
    cutoff = bandwidth * np.pi / grid.spacing
    shape = (4,) + grid.shape
    coeffs = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    coeffs *= np.exp(-0.5 * multipliers(grid).xi_sq / cutoff ** 2)
    return normalize(SpinorField.from_spectrum(coeffs, grid))


def random_positive_direction(grid, rng):
    return normalize(project(random_spinor(grid, rng), Sign.PLUS))


def _beta(u):
    data = u.data.copy()
    data[2:] *= -1.0
    return SpinorField(data, u.grid)


def _relative(a, b):
    return l2_norm(a) / l2_norm(b)


def algebra_defects(u):
    """Relative defects of the projector and Foldy-Wouthuysen identities
    on one field."""
    grid = u.grid
    plus, minus = project(u, Sign.PLUS), project(u, Sign.MINUS)
    abs_u = apply_abs_dirac(u)
    fw_u = fw_transform(u, Direction.FORWARD)
    h_half_sq = weighted_norm_sq(
        u, np.sqrt(1.0 + multipliers(grid).xi_sq)
    )
    low = min(grid.rest_energy, grid.c) * h_half_sq
    high = max(grid.rest_energy, grid.c) * h_half_sq
    energy_sq = c_norm_sq(u)
    return {
        'projector_sum': _relative(plus + minus - u, u),
        'projector_idempotent': _relative(project(plus, Sign.PLUS) - plus, u),
        'projector_orthogonal': _relative(project(plus, Sign.MINUS), u),
        'dirac_commutation': max(
            _relative(apply_dirac(plus) - apply_abs_dirac(plus), abs_u),
            _relative(apply_dirac(minus) + apply_abs_dirac(minus), abs_u),
        ),
        'fw_conjugation': _relative(
            fw_transform(apply_dirac(u), Direction.FORWARD)
            - _beta(apply_abs_dirac(fw_u)),
            abs_u,
        ),
        'fw_unitary': abs(l2_norm(fw_u) / l2_norm(u) - 1.0),
        'parseval': abs(spectral_l2_norm(u) / l2_norm(u) - 1.0),
        'norm_sandwich': max(low - energy_sq, energy_sq - high, 0.0)
        / energy_sq,
    }


def algebra_suite(rng, n=ALGEBRA_N, samples=ALGEBRA_SAMPLES):
    worst = {}
    for index in range(samples):
        c = ALGEBRA_SPEEDS[index % len(ALGEBRA_SPEEDS)]
        grid = GridSpec(n=n, box=8.0, c=c, p=DEFAULT_P)
        for name, value in algebra_defects(random_spinor(grid, rng)).items():
            worst[name] = max(worst.get(name, 0.0), value)
    return [
        at_most(name, value, ALGEBRA_TOL, f'{samples} fields, N={n}')
        for name, value in worst.items()
    ]


def richardson(derivative, step):
    """(4 D(step/2) - D(step)) / 3 for a central difference D."""
    return (4.0 * derivative(0.5 * step) - derivative(step)) / 3.0


def energy_gradient_defect(u, h, step=GRADIENT_STEP):
    gradient = l2_gradient(u)

    def central(eps):
        return (
            energy(u + eps * h).total - energy(u - eps * h).total
        ) / (2.0 * eps)

    exact = inner(gradient, h).real
    return abs(richardson(central, step) - exact) / (
        l2_norm(gradient) * l2_norm(h)
    )


def envelope_gradient_defect(w, v, step=GRADIENT_STEP):
    """Compare d/dt E(normalize(P^+(w + t v))) at t = 0 with <g, v>."""
    base = inner_maximize(w, tol=GRADIENT_INNER_TOL)
    gradient = envelope_gradient(w, base)

    def value(t):
        point = normalize(project(w + t * v, Sign.PLUS))
        return inner_maximize(
            point, tol=GRADIENT_INNER_TOL, eta0=base.eta, validate=False
        ).value

    def central(eps):
        return (value(eps) - value(-eps)) / (2.0 * eps)

    exact = inner(gradient, v).real
    return abs(richardson(central, step) - exact) / (
        l2_norm(gradient) * l2_norm(v)
    )


def tangent_direction(w, rng):
    v = project(random_spinor(w.grid, rng), Sign.PLUS)
    return normalize(v - inner(w, v).real * w)


def gradient_suite(rng, n=GRADIENT_N, samples=GRADIENT_SAMPLES):
    grid = GridSpec(n=n, box=6.0, c=2.0, p=DEFAULT_P)
    energy_worst = max(
        energy_gradient_defect(
            random_spinor(grid, rng), random_spinor(grid, rng)
        )
        for _ in range(samples)
    )
    envelope_worst = 0.0
    for _ in range(samples):
        w = random_positive_direction(grid, rng)
        envelope_worst = max(
            envelope_worst,
            envelope_gradient_defect(w, tangent_direction(w, rng)),
        )
    detail = f'{samples} directions, N={n}, Richardson step {GRADIENT_STEP}'
    return [
        at_most('energy_gradient', energy_worst, GRADIENT_TOL, detail),
        at_most('envelope_gradient', envelope_worst, GRADIENT_TOL, detail),
    ]


def restart_distance(w, rng):
    """H^{1/2} gap between inner maximizers started from eta = 0 and from
    a random point of E_c^-."""
    cold = inner_maximize(w)
    eta0 = 0.3 * normalize(project(random_spinor(w.grid, rng), Sign.MINUS))
    warm = inner_maximize(w, eta0=eta0)
    return h_half_distance(align_phase(warm.u_star, cold.u_star), cold.u_star)


def variational_suite(rng, n=GRADIENT_N, samples=VARIATIONAL_SAMPLES):
    grid = GridSpec(n=n, box=6.0, c=2.0, p=DEFAULT_P)
    upper_excess = -np.inf
    lower_excess = -np.inf
    for _ in range(samples):
        w = random_positive_direction(grid, rng)
        reduced = inner_maximize(w).value
        upper_excess = max(upper_excess, reduced - c_norm_sq(w))
        lower_excess = max(lower_excess, energy(w).total - reduced)
    restart = max(
        restart_distance(random_positive_direction(grid, rng), rng)
        for _ in range(2)
    )
    wide = GridSpec(n=n, box=6.0, c=4.0, p=DEFAULT_P)
    duality = max(
        tau_c_duality_check(gaussian_spinor(wide, width=1.0), c)
        for c in (2.0, 4.0)
    )
    return [
        at_most(
            'reduced_below_c_norm', upper_excess, VARIATIONAL_SLACK,
            f'{samples} random w',
        ),
        at_most(
            'reduced_above_direction', lower_excess, VARIATIONAL_SLACK,
            f'{samples} random w',
        ),
        at_most('inner_restart', restart, RESTART_TOL),
        at_most('tau_c_duality', duality, DUALITY_TOL),
    ]


def synthetic_records(rng, count=4):
    return [
        SweepRecord(**{
            name: float(value)
            for name, value in zip(COLUMNS, rng.standard_normal(len(COLUMNS)))
        })
        for _ in range(count)
    ]


def persistence_suite(rng):
    grid = GridSpec(n=8, box=3.0, c=7.0, p=DEFAULT_P, tau=0.5)
    u = random_spinor(grid, rng, bandwidth=1.0)
    raw = encode_field(u)
    loaded = decode_field(raw)
    bitwise = (
        loaded.grid == grid
        and loaded.data.tobytes() == u.data.tobytes()
    )
    try:
        decode_field(raw[:-1])
    except TruncatedPayload:
        truncation = True
    except FieldFormatError:
        truncation = False
    else:
        truncation = False
    records = synthetic_records(rng)
    with tempfile.TemporaryDirectory() as directory:
        path = Path(directory) / 'records.csv'
        write_csv(records, path)
        csv_exact = read_report_csv(path) == records
    return [
        CriterionResult('field_round_trip', bitwise, bitwise, True),
        CriterionResult('field_truncation', truncation, truncation, True),
        CriterionResult('csv_round_trip', csv_exact, csv_exact, True),
    ]


SUITES = {
    Suite.ALGEBRA: algebra_suite,
    Suite.GRADIENT: gradient_suite,
    Suite.VARIATIONAL: variational_suite,
    Suite.PERSISTENCE: persistence_suite,
}


def run_acceptance(suites=None, seed=0):
    """Run the named suites (all by default) and return their verdicts."""
    rng = np.random.default_rng(seed)
    selected = tuple(Suite) if suites is None else tuple(map(Suite, suites))
    results = []
    for suite in selected:
        logger.info('Running %s suite', suite.value)
        outcome = SUITES[suite](rng)
        for item in outcome:
            logger.info(
                '%s: %s (%s)', item.name,
                'passed' if item.passed else 'FAILED', item.value,
            )
        results.extend(outcome)
    return results
