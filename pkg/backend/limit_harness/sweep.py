"""c-sweeps, single solves and tau scans."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from django.conf import settings
from django.core.exceptions import ValidationError

from core.constants import (
    BOX_REFINE_FACTOR,
    DEFAULT_M,
    DEFAULT_N,
    DEFAULT_TAU,
    TOL_INNER,
    TOL_OUTER,
)
from core.exceptions import NdgsError, SweepFailed
from core.validators import validate_c_list, validate_exponent, validate_tau
from functionals.model import constants, scaled_energy
from limit_harness.observables import record_from_report
from limit_harness.persistence import save_field
from maxmin_solver.outer import Seed, outer_minimize
from nls_limit.flow import discrete_reference
from nls_limit.model import build_limit_model, limit_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSettings:
    p: float
    m: float = DEFAULT_M
    tau: float = DEFAULT_TAU
    n: int = DEFAULT_N
    box: Optional[float] = None
    tol_outer: float = TOL_OUTER
    tol_inner: float = TOL_INNER
    warm_start: bool = True
    workers: Optional[int] = None

    def as_dict(self):
        return {
            'p': self.p,
            'm': self.m,
            'tau': self.tau,
            'n': self.n,
            'box': self.box,
            'tol_outer': self.tol_outer,
            'tol_inner': self.tol_inner,
            'warm_start': self.warm_start,
        }


@dataclass
class SweepResult:
    settings: SweepSettings
    model: object
    grid: object
    c_list: tuple
    records: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    reports: dict = field(default_factory=dict)
    fields: list = field(default_factory=list)


def sweep_workers(workers=None):
    if workers is not None:
        return workers
    return getattr(settings, 'NDGS', {}).get('SWEEP_WORKERS', 1)


def base_grid(sweep_settings, model):
    """Fixed box and resolution shared by every c of the sweep."""
    grid = limit_grid(
        sweep_settings.p,
        sweep_settings.m,
        model.nu,
        n=sweep_settings.n,
        tau=sweep_settings.tau,
    )
    if sweep_settings.box is not None:
        grid = grid.replace(box=sweep_settings.box)
    return grid


def _solve_point(grid, c, init, sweep_settings, model, reference=None):
    started = time.perf_counter()
    report = outer_minimize(
        grid.replace(c=c),
        init=init,
        tol_outer=sweep_settings.tol_outer,
        tol_inner=sweep_settings.tol_inner,
        model=model,
    )
    wall_time = time.perf_counter() - started
    return report, record_from_report(report, model, wall_time, reference)


def _save(result, c, report, out_dir):
    if out_dir is None:
        return
    path = Path(out_dir) / f'u_c{c:g}.ndgs'
    digest = save_field(report.ground_state, path)
    result.fields.append({'path': path.name, 'sha256': digest})


def _failure(result, c, error):
    logger.warning('Sweep point c=%g failed: %s', c, error)
    result.failures.append({'c': float(c), 'error': str(error)})


def run_sweep(p, c_list, sweep_settings=None, out_dir=None, model=None,
              **overrides):
    """Solve for every c and collect the limit observables.

    Warm sweeps seed each c with the previous ground state; cold sweeps
    start every point from the embedded limit profile and run
    concurrently. Failed points are recorded and skipped. Orbit distances
    are taken to the limit minimizer on the sweep lattice.
    """
    validate_exponent(p)
    c_list = tuple(float(c) for c in c_list)
    validate_c_list(c_list)
    if sweep_settings is None:
        sweep_settings = SweepSettings(p=p, **overrides)
    validate_tau(sweep_settings.tau)
    if model is None:
        model = build_limit_model(p, sweep_settings.m)
    grid = base_grid(sweep_settings, model)
    reference = discrete_reference(model, grid)
    result = SweepResult(
        settings=sweep_settings, model=model, grid=grid, c_list=c_list
    )
    outcomes = {}
    if sweep_settings.warm_start:
        init = Seed.FW_GAUSSIAN
        for c in c_list:
            try:
                report, record = _solve_point(
                    grid, c, init, sweep_settings, model, reference
                )
            except (NdgsError, ValidationError) as error:
                _failure(result, c, error)
                continue
            outcomes[c] = (report, record)
            init = report.ground_state
    else:
        with ThreadPoolExecutor(
            max_workers=sweep_workers(sweep_settings.workers)
        ) as executor:
            futures = {
                c: executor.submit(
                    _solve_point, grid, c, Seed.FW_GAUSSIAN,
                    sweep_settings, model, reference,
                )
                for c in c_list
            }
            for c, future in futures.items():
                try:
                    outcomes[c] = future.result()
                except (NdgsError, ValidationError) as error:
                    _failure(result, c, error)
    for c in c_list:
        if c not in outcomes:
            continue
        report, record = outcomes[c]
        result.reports[c] = report
        result.records.append(record)
        _save(result, c, report, out_dir)
    if len(result.failures) * 2 > len(c_list):
        raise SweepFailed(
            f'{len(result.failures)} of {len(c_list)} sweep points failed.',
            records=result.records,
            failures=result.failures,
        )
    logger.info(
        'Sweep p=%g finished: %d points, %d failures',
        p, len(result.records), len(result.failures),
    )
    return result


def solve_single(grid, init=Seed.FW_GAUSSIAN, tol_outer=TOL_OUTER,
                 tol_inner=TOL_INNER, model=None):
    """One ground state with its sweep row."""
    if model is None:
        model = build_limit_model(grid.p, grid.m)
    started = time.perf_counter()
    report = outer_minimize(
        grid, init=init, tol_outer=tol_outer, tol_inner=tol_inner,
        model=model,
    )
    record = record_from_report(
        report, model, time.perf_counter() - started
    )
    return report, record


def box_refinement(grid, report, model=None, factor=BOX_REFINE_FACTOR,
                   **solver_options):
    """Re-solve on a box enlarged by ``factor`` at the same spacing.

    Shifts of omega and e are in units of mc^2; they estimate the torus
    truncation error and are reported, not checked.
    """
    n = 2 * int(round(factor * grid.n / 2))
    wide = grid.replace(n=n, box=grid.box * n / grid.n)
    wide_report = outer_minimize(wide, model=model, **solver_options)
    rest = grid.rest_energy
    refinement = {
        'factor': n / grid.n,
        'box': wide.box,
        'n': n,
        'omega_delta': abs(wide_report.omega - report.omega) / rest,
        'energy_delta': abs(wide_report.energy - report.energy) / rest,
    }
    logger.info(
        'Box %g -> %g: |d omega|=%.3e |d e|=%.3e (mc^2 units)',
        grid.box, wide.box, refinement['omega_delta'],
        refinement['energy_delta'],
    )
    return refinement


@dataclass(frozen=True)
class EnergyScan:
    rows: tuple
    monotone: bool
    subadditive: Optional[bool]
    pair_rows: tuple = ()


def _tau_for_mass(a, theta):
    return a ** (1.0 / theta)


def energy_scan(grid, taus, mass_pairs=(), model=None, **solver_options):
    """e_c(tau) and E_c(tau) = tau^theta e_c(tau) over ``taus``.

    ``monotone`` states that e_c strictly decreases as tau grows. Each
    (a1, a2) in ``mass_pairs`` with a1 + a2 <= 1 checks
    E_c((a1 + a2)^{1/theta}) < E_c(a1^{1/theta}) + E_c(a2^{1/theta}).
    """
    theta = constants(grid.p).theta
    for a1, a2 in mass_pairs:
        if not (a1 > 0 and a2 > 0 and a1 + a2 <= 1):
            raise ValidationError(
                f'Mass pairs need a1, a2 > 0 and a1 + a2 <= 1, '
                f'got ({a1!r}, {a2!r}).'
            )
    if model is None:
        model = build_limit_model(grid.p, grid.m)
    cache = {}

    def ground_energy(tau):
        if tau not in cache:
            report = outer_minimize(
                grid.replace(tau=tau), model=model, **solver_options
            )
            cache[tau] = report.energy
        return cache[tau]

    taus = sorted(float(tau) for tau in taus)
    rows = tuple(
        (tau, ground_energy(tau), scaled_energy(tau, ground_energy(tau),
                                                grid.p))
        for tau in taus
    )
    energies = [row[1] for row in rows]
    monotone = all(b < a for a, b in zip(energies, energies[1:]))
    pair_rows = []
    for a1, a2 in mass_pairs:
        parts = [
            scaled_energy(tau, ground_energy(tau), grid.p)
            for tau in (
                _tau_for_mass(a1, theta),
                _tau_for_mass(a2, theta),
                _tau_for_mass(a1 + a2, theta),
            )
        ]
        pair_rows.append((a1, a2, parts[2], parts[0] + parts[1]))
    subadditive = None
    if pair_rows:
        subadditive = all(joint < split for *_, joint, split in pair_rows)
    return EnergyScan(
        rows=rows,
        monotone=monotone,
        subadditive=subadditive,
        pair_rows=tuple(pair_rows),
    )
