"""Energy functional, its L^2 gradient, multiplier and residuals."""
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError

from core.constants import UNIT_MASS_TOL
from functionals.model import coupling
from spectral_core.norms import c_norm_sq, inner, l2_norm, l2_norm_sq
from spectral_core.operators import (
    Sign,
    apply_dirac,
    project_coefficients,
)


def _tau(u, tau):
    return u.grid.tau if tau is None else tau


def power_integral(u):
    """h^3 sum |u|^p."""
    density = np.sum(np.abs(u.data) ** 2, axis=0)
    return u.grid.cell_volume * float(
        np.sum(density ** (0.5 * u.grid.p))
    )


def nonlinear_mass(u):
    """A[u] = (2/p) int |u|^p."""
    return 2.0 / u.grid.p * power_integral(u)


def nonlinearity(u):
    """|u|^{p-2} u pointwise, zero where u vanishes."""
    modulus = u.modulus()
    weight = np.zeros_like(modulus)
    mask = modulus > 0
    weight[mask] = modulus[mask] ** (u.grid.p - 2.0)
    return type(u)(weight[None] * u.data, u.grid)


@dataclass(frozen=True)
class EnergyBreakdown:
    pos: float
    neg: float
    nl: float
    total: float
    rest_subtracted: float


def energy(u, tau=None):
    """I^{c,tau}(u) = ||u+||_c^2 - ||u-||_c^2 - tau^zeta A[u]."""
    grid = u.grid
    coeffs = u.spectrum()
    pos = c_norm_sq(u, project_coefficients(grid, coeffs, Sign.PLUS))
    neg = c_norm_sq(u, project_coefficients(grid, coeffs, Sign.MINUS))
    nl = nonlinear_mass(u)
    total = pos - neg - coupling(grid.p, _tau(u, tau)) * nl
    return EnergyBreakdown(
        pos=pos,
        neg=neg,
        nl=nl,
        total=total,
        rest_subtracted=total - grid.rest_energy,
    )


def l2_gradient(u, tau=None):
    """Riesz representative 2 D_c u - 2 tau^zeta |u|^{p-2} u."""
    weight = coupling(u.grid.p, _tau(u, tau))
    return 2.0 * apply_dirac(u) - 2.0 * weight * nonlinearity(u)


def _require_unit_mass(u):
    mass = l2_norm_sq(u)
    if abs(mass - 1.0) > UNIT_MASS_TOL:
        raise ValidationError(
            f'Multiplier requires a normalized field, got mass {mass!r}.'
        )


def multiplier(u, tau=None):
    """omega(u) = 1/2 <grad I(u), u>."""
    _require_unit_mass(u)
    return 0.5 * inner(l2_gradient(u, tau), u).real


def multiplier_from_energy(u, tau=None):
    """Same multiplier through I - tau^zeta (p - 2)/p int |u|^p."""
    _require_unit_mass(u)
    p = u.grid.p
    weight = coupling(p, _tau(u, tau))
    return (
        energy(u, tau).total
        - weight * (p - 2.0) / p * power_integral(u)
    )


def rest_mass_term(u):
    """int <mc^2 beta u, u> in physical space."""
    density = np.abs(u.data) ** 2
    upper = float(np.sum(density[:2]))
    lower = float(np.sum(density[2:]))
    return u.grid.rest_energy * u.grid.cell_volume * (upper - lower)


def pohozaev_residual(u, tau=None):
    """||u+||_c^2 - ||u-||_c^2 - int <mc^2 beta u, u>
    + tau^zeta ((6 - 3p)/p) int |u|^p."""
    breakdown = energy(u, tau)
    p = u.grid.p
    weight = coupling(p, _tau(u, tau))
    return (
        breakdown.pos
        - breakdown.neg
        - rest_mass_term(u)
        + weight * (6.0 - 3.0 * p) / p * power_integral(u)
    )


def el_residual(u, omega, tau=None):
    """||D_c u - tau^zeta |u|^{p-2} u - omega u||_{L^2}."""
    weight = coupling(u.grid.p, _tau(u, tau))
    residual = apply_dirac(u) - weight * nonlinearity(u) - omega * u
    return l2_norm(residual)


def euler_lagrange(u, omega, tau=None):
    """Stationarity defect ||grad I(u) - 2 omega u||_{L^2}."""
    return l2_norm(l2_gradient(u, tau) - 2.0 * omega * u)

