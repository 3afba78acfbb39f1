"""Normalized gradient flow for the limit functional on a 3D grid."""
import logging

import numpy as np

from core.constants import (
    LOG_EVERY,
    MAX_FLOW_ITERS,
    MAX_STEP,
    PRECONDITIONER_MIN_SHIFT,
    TOL_FLOW,
    VALUE_ROUNDOFF,
)
from core.exceptions import MaxIters
from core.linesearch import backtrack
from functionals.energy import nonlinearity
from functionals.model import coupling
from nls_limit.model import nls_energy
from spectral_core.fields import PairField
from spectral_core.grid import multipliers
from spectral_core.norms import inner, l2_norm, normalize

logger = logging.getLogger(__name__)


def nls_gradient(f, tau=1.0):
    """L^2 gradient (-Delta f)/m - 2 tau^zeta |f|^{p-2} f."""
    grid = f.grid
    kinetic = PairField.from_spectrum(
        multipliers(grid).xi_sq * f.spectrum() / grid.m, grid
    )
    return kinetic - 2.0 * coupling(grid.p, tau) * nonlinearity(f)


def flow_multiplier(f, tau=1.0):
    """nu = -1/2 Re<grad I(f), f> for normalized f."""
    return -0.5 * inner(nls_gradient(f, tau), f).real


def default_orbital(grid):
    data = np.zeros((2,) + grid.shape)
    data[0] = np.exp(-0.5 * (grid.radius() / (grid.box / 6.0)) ** 2)
    return normalize(PairField(data, grid))


def nls_ground_flow(grid, init=None, tol=TOL_FLOW, max_iters=MAX_FLOW_ITERS,
                    tau=1.0, callback=None):
    """Minimize I^{inf,tau} over the unit L^2 sphere.

    Sphere-projected gradient preconditioned by (|xi|^2/2m + nu)^{-1},
    Armijo backtracking and renormalization. Returns the minimizer and
    its energy; ``callback(iteration, f, energy)`` sees every iterate.
    """
    f = default_orbital(grid) if init is None else normalize(init)
    value = nls_energy(f, tau)
    step_size = 1.0
    kinetic = multipliers(grid).xi_sq / (2.0 * grid.m)

    def trial(step, f, direction):
        candidate = normalize(f + step * direction)
        return candidate, nls_energy(candidate, tau), None

    for iteration in range(max_iters + 1):
        gradient = nls_gradient(f, tau)
        g = gradient - inner(f, gradient).real * f
        g_norm = l2_norm(g)
        if callback is not None:
            callback(iteration, f, value)
        if iteration % LOG_EVERY == 0:
            logger.debug(
                'flow %d: I=%.12g |grad|=%.3e', iteration, value, g_norm
            )
        if g_norm <= tol:
            logger.info(
                'NLS flow converged in %d iterations: e_inf=%.12g',
                iteration, value,
            )
            return f, value
        if iteration == max_iters:
            break
        shift = max(-0.5 * inner(gradient, f).real, PRECONDITIONER_MIN_SHIFT)
        scaled = PairField.from_spectrum(
            0.5 * g.spectrum() / (kinetic + shift), grid
        )
        direction = -(scaled - inner(f, scaled).real * f)
        slope = inner(g, direction).real
        step = backtrack(
            lambda t: trial(t, f, direction), value, slope, step_size
        )
        ceiling = value + VALUE_ROUNDOFF * max(1.0, abs(value))
        if step.point is None or step.value > ceiling:
            break
        f, value = step.point, step.value
        step_size = min(2.0 * step.step, MAX_STEP)
    raise MaxIters(
        f'NLS flow did not converge in {iteration} iterations '
        f'(|grad|={g_norm:.3e}).',
        result=(f, value),
    )


def discrete_reference(model, grid, tol=TOL_FLOW):
    """Minimizer of I^{inf,tau} on the lattice of ``grid``, seeded by h.

    Sweeps measure orbit distances against it so that the sampling error
    of h does not put a floor under them.
    """
    init = model.pair(grid, tau=grid.tau)
    try:
        f, _ = nls_ground_flow(grid, init=init, tol=tol, tau=grid.tau)
    except MaxIters as error:
        logger.warning('Discrete reference not converged: %s', error)
        f, _ = error.result
    return f
