"""Normalized Schroedinger ground state h built from U_p."""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from django.core.exceptions import ValidationError

from core.constants import BOX_EFOLDINGS, DEFAULT_N, P_MASS_CRITICAL_NLS
from core.validators import validate_exponent, validate_positive
from functionals.energy import nonlinear_mass
from functionals.model import coupling
from nls_limit.radial import ode_residual, solve_up
from spectral_core.fields import PairField
from spectral_core.grid import GridSpec
from spectral_core.norms import gradient_norm

logger = logging.getLogger(__name__)


def _nu_exponent(p):
    return 3.0 * (p - 2.0) / (10.0 - 3.0 * p)


def nu_formula(p, m, up_mass):
    """nu = (2m / ||U_p||^{4/3})^{3(p-2)/(10-3p)}."""
    if p == P_MASS_CRITICAL_NLS:
        raise ValidationError('nu is undefined at the mass-critical p=10/3.')
    validate_exponent(p, upper=P_MASS_CRITICAL_NLS)
    validate_positive(m, 'm')
    validate_positive(up_mass, 'up_mass')
    return (2.0 * m / up_mass ** (4.0 / 3.0)) ** _nu_exponent(p)


def up_mass_from_nu(p, m, nu):
    """||U_p||_{L^2} implied by a multiplier nu; inverse of nu_formula."""
    validate_exponent(p, upper=P_MASS_CRITICAL_NLS)
    validate_positive(nu, 'nu')
    return np.sqrt(nu ** (-2.0 / (p - 2.0)) * (2.0 * m * nu) ** 1.5)


def nls_energy(f, tau=1.0):
    """I^{inf,tau}(f) = (1/2m) ||grad f||^2 - tau^zeta A[f]."""
    grid = f.grid
    kinetic = gradient_norm(f) ** 2 / (2.0 * grid.m)
    return kinetic - coupling(grid.p, tau) * nonlinear_mass(f)


def e_inf(tau, model):
    """e_inf(tau) = tau^2 e_inf(1)."""
    return tau ** 2 * model.e_inf


def limit_grid(p, m, nu, n=DEFAULT_N, c=1.0, tau=1.0):
    """Box of BOX_EFOLDINGS decay lengths 1/sqrt(2 m nu)."""
    box = BOX_EFOLDINGS / np.sqrt(2.0 * m * nu)
    return GridSpec(n=n, box=float(box), m=m, c=c, p=p, tau=tau)


@dataclass(frozen=True)
class LimitModel:
    p: float
    m: float
    nu: float
    profile: object
    grid: GridSpec
    h: PairField
    e_inf: float

    @property
    def decay_rate(self):
        return float(np.sqrt(2.0 * self.m * self.nu))

    def radial_h(self, r):
        """h(r) = nu^{1/(p-2)} U_p(sqrt(2 m nu) r)."""
        scale = self.nu ** (1.0 / (self.p - 2.0))
        return scale * self.profile(self.decay_rate * np.asarray(r))

    def sample(self, grid, tau=1.0):
        """tau^{3/2} h(tau x) on ``grid``."""
        return tau ** 1.5 * self.radial_h(tau * grid.radius())

    def pair(self, grid, tau=1.0):
        data = np.zeros((2,) + grid.shape)
        data[0] = self.sample(grid, tau)
        return PairField(data, grid)

    def e_inf_at(self, tau):
        return e_inf(tau, self)


def sample_profile(profile, grid, nu, m, p):
    """h on a 3D grid by interpolating the radial profile."""
    scale = nu ** (1.0 / (p - 2.0))
    return scale * profile(np.sqrt(2.0 * m * nu) * grid.radius())


def build_h(p, m, profile, grid=None, n=DEFAULT_N):
    nu = nu_formula(p, m, profile.mass_l2)
    if grid is None:
        grid = limit_grid(p, m, nu, n=n)
    data = np.zeros((2,) + grid.shape)
    data[0] = sample_profile(profile, grid, nu, m, p)
    h = PairField(data, grid)
    model = LimitModel(
        p=p,
        m=m,
        nu=nu,
        profile=profile,
        grid=grid,
        h=h,
        e_inf=nls_energy(h),
    )
    logger.info(
        'Limit model p=%g m=%g: nu=%.12g e_inf=%.12g', p, m, nu, model.e_inf
    )
    return model


@lru_cache(maxsize=8)
def cached_profile(p):
    return solve_up(p)


def build_limit_model(p, m, grid=None, n=DEFAULT_N):
    return build_h(p, m, cached_profile(p), grid=grid, n=n)


def nse_residual(model):
    """Sup of -Delta h/(2m) + nu h - h^{p-1} on interior radial nodes.

    h is U_p rescaled, so the residual is the profile ODE residual times
    nu^{(p-1)/(p-2)}.
    """
    scale = model.nu ** ((model.p - 1.0) / (model.p - 2.0))
    return scale * ode_residual(model.profile)
