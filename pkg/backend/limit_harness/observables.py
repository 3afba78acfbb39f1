"""Limit observables of a converged ground state."""
import logging
import math

from core.constants import G_NORM_ORDERS
from core.exceptions import NdgsError
from limit_harness.fitting import Component, fit_decay
from limit_harness.records import G_NORM_COLUMNS, SweepRecord
from nls_limit.orbit import orbit_distance
from spectral_core.fields import PairField
from spectral_core.grid import multipliers
from spectral_core.norms import gradient_norm, l2_norm, sobolev_norm
from spectral_core.operators import Sign, project, sigma_dot

logger = logging.getLogger(__name__)


def closure_residual(u):
    """||2m g + i sigma.grad f / c||_{L^2} for u = (f, g)."""
    grid = u.grid
    coeffs = u.spectrum()
    xi = multipliers(grid).xi
    closure = 2.0 * grid.m * coeffs[2:] - sigma_dot(xi, coeffs[:2]) / grid.c
    return l2_norm(PairField.from_spectrum(closure, grid))


def amplitude_ratio(u):
    """max|g| / max|f|."""
    return float(u.lower().modulus().max() / u.upper().modulus().max())


def decay_rate(u, component=Component.UPPER):
    try:
        return fit_decay(u, component).delta
    except NdgsError as error:
        logger.warning('Decay fit failed at c=%g: %s', u.grid.c, error)
        return math.nan


def record_from_report(report, model, wall_time=0.0, reference=None):
    u = report.ground_state
    grid = u.grid
    upper, lower = u.upper(), u.lower()
    negative = project(u, Sign.MINUS)
    orbit = orbit_distance(upper, model, strict=False, reference=reference)
    g_norms = {
        G_NORM_COLUMNS[s]: sobolev_norm(lower, s) for s in G_NORM_ORDERS
    }
    return SweepRecord(
        c=float(grid.c),
        omega_c=float(report.omega),
        gap=float(grid.rest_energy - report.omega),
        e_c=float(report.energy),
        neg_l2=float(l2_norm(negative)),
        neg_grad_l2=float(gradient_norm(negative)),
        orbit_dist=orbit.distance,
        pohozaev=float(report.pohozaev),
        el_residual=float(report.el_residual),
        decay_delta_plus=float(decay_rate(u)),
        decay_ratio_minus=amplitude_ratio(u),
        h2_norm=float(sobolev_norm(u, 2.0)),
        wall_time=float(wall_time),
        energy_defect=float(
            report.energy - grid.rest_energy - model.e_inf_at(grid.tau)
        ),
        closure_residual=float(closure_residual(u)),
        outer_iters=float(report.iterations),
        **{name: float(value) for name, value in g_norms.items()},
    )
