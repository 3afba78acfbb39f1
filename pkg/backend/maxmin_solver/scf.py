"""Self-consistent fixed-point iteration through the free resolvent.

Independent of the max-min path; used to cross-check its ground states.
"""
import logging

from core.constants import (
    LOG_EVERY,
    MAX_SCF_ITERS,
    SCF_DAMPING,
    SCF_GAP_MARGIN,
    TOL_SCF,
)
from core.exceptions import GapViolation, MaxIters
from functionals.energy import el_residual, energy, nonlinearity
from functionals.model import coupling
from maxmin_solver.reports import build_report
from spectral_core.norms import inner, normalize
from spectral_core.operators import apply_dirac, apply_resolvent

logger = logging.getLogger(__name__)


def rayleigh_multiplier(u, weight):
    """<u, D_c u - tau^zeta |u|^{p-2} u> for normalized ``u``."""
    return inner(u, apply_dirac(u) - weight * nonlinearity(u)).real


def scf_shift(grid, omega):
    rest = grid.rest_energy
    if (rest - abs(omega)) / rest < SCF_GAP_MARGIN:
        return 0.5 * (rest - omega)
    return 0.0


def scf_oracle(grid, init, tol=TOL_SCF, max_iters=MAX_SCF_ITERS, tau=None,
               mixing=SCF_DAMPING):
    """u <- normalize(mix(u, (D_c - omega + s)^{-1}[tau^zeta N(u) + s u])).

    Without nonlinearity the step is shifted inverse iteration with the
    spectral point held at mc^2 (1 - margin).
    """
    tau = grid.tau if tau is None else tau
    weight = coupling(grid.p, tau)
    rest = grid.rest_energy
    u = normalize(init.with_grid(grid))
    omega = rayleigh_multiplier(u, weight)
    history = []
    for iteration in range(max_iters + 1):
        residual = el_residual(u, omega, tau)
        history.append((energy(u, tau).total, residual))
        if iteration % LOG_EVERY == 0:
            logger.debug(
                'scf %d: omega=%.12g residual=%.3e',
                iteration, omega, residual,
            )
        if residual <= tol * rest:
            logger.info(
                'SCF converged in %d iterations: omega=%.12g',
                iteration, omega,
            )
            return build_report(
                u, omega, tau,
                history=history, iterations=iteration, solver='scf',
            )
        if iteration == max_iters:
            break
        if weight == 0:
            target = rest * (1.0 - SCF_GAP_MARGIN)
            update = apply_resolvent(u, target)
        else:
            if abs(omega) >= rest:
                raise GapViolation(
                    f'SCF multiplier {omega:.12g} left the gap '
                    f'(-{rest:.6g}, {rest:.6g}) at iteration {iteration}.'
                )
            shift = scf_shift(grid, omega)
            source = weight * nonlinearity(u) + shift * u
            update = apply_resolvent(source, omega, shift)
        update = normalize(update)
        u = normalize(u + mixing * (update - u))
        omega = rayleigh_multiplier(u, weight)
    raise MaxIters(
        f'SCF did not converge in {max_iters} iterations '
        f'(residual {residual:.3e}).',
        result=build_report(
            u, omega, tau,
            history=history, iterations=max_iters, converged=False,
            solver='scf',
        ),
    )
