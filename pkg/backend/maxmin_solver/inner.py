"""Maximization of I^{c,tau} over the slice span{w} + E_c^- of the sphere.

A point of the slice is stored as u = a w + eta with eta in E_c^- and
a = sqrt(1 - ||eta||^2) > 0, which fixes the global phase so that
<w, u^+> = a is real and positive.
"""
import logging
from dataclasses import dataclass, field

import numpy as np
from django.core.exceptions import ValidationError

from core.constants import (
    LOG_EVERY,
    MAX_INNER_ITERS,
    POSITIVE_SUBSPACE_TOL,
    TOL_INNER,
    UNIT_MASS_TOL,
    VALUE_ROUNDOFF,
)
from core.exceptions import MaxIters, NonConcaveStep
from core.linesearch import backtrack
from functionals.constraints import in_constraint_set
from functionals.energy import energy, l2_gradient
from spectral_core.fields import SpinorField
from spectral_core.grid import multipliers
from spectral_core.norms import inner, l2_norm, l2_norm_sq
from spectral_core.operators import Sign, project

logger = logging.getLogger(__name__)


@dataclass
class InnerResult:
    u_star: SpinorField
    value: float
    omega: float
    grad_norm: float
    iters: int
    eta: SpinorField
    amplitude: float
    gradient: SpinorField
    history: list = field(default_factory=list)
    converged: bool = True


def gradient_scale(grid):
    return max(1.0, grid.rest_energy)


def check_positive_direction(w):
    mass = l2_norm_sq(w)
    if abs(mass - 1.0) > UNIT_MASS_TOL:
        raise ValidationError(f'w must be normalized, got mass {mass!r}.')
    leak = l2_norm(project(w, Sign.MINUS))
    if leak > POSITIVE_SUBSPACE_TOL:
        raise ValidationError(
            f'w must lie in the positive spectral subspace, '
            f'||P^- w|| = {leak:.3e}.'
        )
    check = in_constraint_set(w)
    if not check.membership.feasible:
        raise ValidationError(
            f'w is outside the constraint set ({check.membership.value}).'
        )


def _compose(w, eta):
    mass = l2_norm_sq(eta)
    if mass >= 1.0:
        return None, 0.0
    amplitude = np.sqrt(1.0 - mass)
    return amplitude * w + eta, amplitude


def _preconditioned(grad, kappa):
    lam = multipliers(grad.grid).lam
    coeffs = grad.spectrum() / (2.0 * (lam + kappa))
    return SpinorField.from_spectrum(coeffs, grad.grid)


def _slice_gradient(w, eta, amplitude, gradient):
    """Gradient of eta -> I(a(eta) w + eta) inside E_c^-."""
    weight = inner(w, gradient).real / amplitude
    return project(gradient, Sign.MINUS) - weight * eta, weight


def inner_maximize(w, tol=TOL_INNER, max_iters=MAX_INNER_ITERS, tau=None,
                   eta0=None, validate=True):
    """Maximize I^{c,tau} on the slice generated by ``w``.

    Preconditioned ascent on eta with the metric |D_c| + kappa, where
    kappa = Re<w, grad I>/(2a) is the curvature contributed by the
    amplitude. ``eta0`` warm-starts from a previous negative part.
    """
    if validate:
        check_positive_direction(w)
    grid = w.grid
    threshold = tol * gradient_scale(grid)
    eta = SpinorField.zeros(grid)
    if eta0 is not None:
        eta = project(eta0.with_grid(grid), Sign.MINUS)
        if l2_norm_sq(eta) >= 1.0:
            eta = SpinorField.zeros(grid)
    u, amplitude = _compose(w, eta)
    value = energy(u, tau).total
    history = [value]

    def trial(step, eta=None, direction=None):
        candidate = project(eta + step * direction, Sign.MINUS)
        point, amp = _compose(w, candidate)
        if point is None:
            return (candidate, amp), -np.inf, None
        return (candidate, amp), energy(point, tau).total, point

    def result(iters, converged):
        return InnerResult(
            u_star=u,
            value=value,
            omega=0.5 * inner(gradient, u).real,
            grad_norm=grad_norm,
            iters=iters,
            eta=eta,
            amplitude=amplitude,
            gradient=gradient,
            history=history,
            converged=converged,
        )

    for iteration in range(max_iters + 1):
        gradient = l2_gradient(u, tau)
        grad, weight = _slice_gradient(w, eta, amplitude, gradient)
        grad_norm = l2_norm(grad)
        if iteration % LOG_EVERY == 0:
            logger.debug(
                'inner %d: I=%.12g |grad|=%.3e', iteration, value, grad_norm
            )
        if grad_norm <= threshold:
            return result(iteration, True)
        if iteration == max_iters:
            break
        kappa = 0.5 * weight
        if kappa <= 0:
            kappa = grid.rest_energy
        direction = _preconditioned(grad, kappa)
        slope = inner(grad, direction).real
        step = backtrack(
            lambda t: trial(t, eta, direction),
            value,
            slope,
            1.0,
            maximize=True,
        )
        floor = value - VALUE_ROUNDOFF * max(1.0, abs(value))
        if step.point is None or (
            not step.accepted and step.value < floor
        ):
            raise NonConcaveStep(
                f'Inner objective decreased at iteration {iteration} '
                f'(|grad|={grad_norm:.3e}).',
                result=result(iteration, False),
            )
        (eta, amplitude), value, u = step.point, step.value, step.payload
        history.append(value)
    raise MaxIters(
        f'Inner maximization did not converge in {max_iters} iterations '
        f'(|grad|={grad_norm:.3e}, target {threshold:.3e}).',
        result=result(max_iters, False),
    )


def reduced_energy(w, tol=TOL_INNER, tau=None, **kwargs):
    """E^{c,tau}(w) = I^{c,tau}(phi(w))."""
    return inner_maximize(w, tol=tol, tau=tau, **kwargs).value
