"""Minimization of the reduced functional over the sphere of E_c^+."""
import logging
from enum import Enum

import numpy as np

from core.constants import (
    LOG_EVERY,
    MAX_OUTER_ITERS,
    MAX_STEP,
    PRECONDITIONER_MIN_SHIFT,
    TOL_INNER,
    TOL_OUTER,
    VALUE_ROUNDOFF,
)
from core.exceptions import CapViolation, MaxIters, NdgsError
from core.linesearch import backtrack
from functionals.constraints import Membership, in_constraint_set
from maxmin_solver.inner import inner_maximize
from maxmin_solver.reports import build_report
from nls_limit.model import build_limit_model
from spectral_core.fields import SpinorField, gaussian_spinor
from spectral_core.grid import multipliers
from spectral_core.norms import inner, l2_norm, normalize
from spectral_core.operators import Direction, Sign, fw_transform, project

logger = logging.getLogger(__name__)


class Seed(str, Enum):
    FW_GAUSSIAN = 'fw_gaussian'
    GAUSSIAN = 'gaussian'


def fw_embedding(pair):
    """w = U_FW^{-1}(f, 0), normalized inside E_c^+."""
    spinor = SpinorField.from_pair(pair)
    embedded = fw_transform(spinor, Direction.INVERSE)
    return normalize(project(embedded, Sign.PLUS))


def seed_direction(grid, init=Seed.FW_GAUSSIAN, model=None, tau=None):
    """Starting point of the outer descent.

    The default embeds the dilated limit profile tau^{3/2} h(tau x) by the
    inverse Foldy-Wouthuysen transform.
    """
    if isinstance(init, SpinorField):
        return normalize(project(init.with_grid(grid), Sign.PLUS))
    tau = grid.tau if tau is None else tau
    if Seed(init) is Seed.GAUSSIAN:
        spinor = gaussian_spinor(grid, width=grid.box / 6.0)
        return normalize(project(spinor, Sign.PLUS))
    if model is None:
        model = build_limit_model(grid.p, grid.m)
    return fw_embedding(model.pair(grid, tau=tau if tau > 0 else 1.0))


def envelope_gradient(w, result):
    """Riemannian gradient of E^{c,tau} at ``w`` from the inner maximizer.

    d E(w)[v] = Re<grad I(phi(w)), a v> for v in E_c^+; the result is
    projected on the tangent space of the sphere at ``w``.
    """
    euclidean = result.amplitude * project(result.gradient, Sign.PLUS)
    return euclidean - inner(w, euclidean).real * w


def _precondition(g, w, omega):
    grid = g.grid
    shift = max(grid.rest_energy - omega, PRECONDITIONER_MIN_SHIFT)
    weight = 0.5 / (multipliers(grid).kinetic + shift)
    scaled = SpinorField.from_spectrum(weight * g.spectrum(), grid)
    return scaled - inner(w, scaled).real * w


def check_cap(w):
    check = in_constraint_set(w)
    if check.membership is Membership.OUTSIDE_ENERGY:
        raise CapViolation(
            f'||w||_c^2 = {check.c_norm_sq:.6g} reached the cap '
            f'{check.cap_sq:.6g}.'
        )


def outer_minimize(grid, init=Seed.FW_GAUSSIAN, tol_outer=TOL_OUTER,
                   tol_inner=TOL_INNER, max_iters=MAX_OUTER_ITERS,
                   tau=None, model=None):
    """Preconditioned Riemannian descent of w -> I(phi(w)).

    Trial points are retracted by P_c^+ and normalization; each inner solve
    is warm-started from the previous negative part. The descent stops when
    the Riemannian gradient norm is below ``tol_outer`` in absolute energy
    units, the same target for every c.
    """
    w = seed_direction(grid, init, model=model, tau=tau)
    check_cap(w)
    threshold = tol_outer
    result = inner_maximize(w, tol=tol_inner, tau=tau)
    history = []
    step_size = 1.0

    def trial(step, w, direction, eta):
        candidate = normalize(project(w + step * direction, Sign.PLUS))
        try:
            check_cap(candidate)
            attempt = inner_maximize(
                candidate, tol=tol_inner, tau=tau, eta0=eta, validate=False
            )
        except NdgsError as error:
            logger.debug('Rejected trial step %.3e: %s', step, error)
            return candidate, np.inf, None
        return candidate, attempt.value, attempt

    def report(iterations, converged):
        return build_report(
            result.u_star,
            result.omega,
            tau,
            history=history,
            iterations=iterations,
            converged=converged,
            positive_direction=w,
            inner=result,
        )

    for iteration in range(max_iters + 1):
        g = envelope_gradient(w, result)
        g_norm = l2_norm(g)
        history.append((result.value, g_norm))
        if iteration % LOG_EVERY == 0:
            logger.debug(
                'outer %d: E=%.12g |grad|=%.3e omega=%.12g',
                iteration, result.value, g_norm, result.omega,
            )
        if g_norm <= threshold:
            logger.info(
                'Max-min solve converged in %d iterations: e=%.12g '
                'omega=%.12g', iteration, result.value, result.omega,
            )
            return report(iteration, True)
        if iteration == max_iters:
            break
        direction = -_precondition(g, w, result.omega)
        noise = VALUE_ROUNDOFF * max(1.0, abs(result.value))
        slope = inner(g, direction).real
        step = backtrack(
            lambda t: trial(t, w, direction, result.eta),
            result.value,
            slope,
            step_size,
            maximize=False,
            noise=noise,
        )
        ceiling = result.value + noise
        if step.payload is None or step.value > ceiling:
            raise MaxIters(
                f'Outer descent stalled at iteration {iteration} '
                f'(|grad|={g_norm:.3e}, target {threshold:.3e}).',
                result=report(iteration, False),
            )
        w, result = step.point, step.payload
        step_size = min(2.0 * step.step, MAX_STEP)
    raise MaxIters(
        f'Outer descent did not converge in {max_iters} iterations '
        f'(|grad|={g_norm:.3e}, target {threshold:.3e}).',
        result=report(max_iters, False),
    )
