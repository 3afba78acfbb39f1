"""Constraint-set membership and the tau <-> c duality identity."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from django.core.exceptions import ValidationError

from core.constants import UNIT_MASS_TOL
from functionals.energy import energy
from functionals.model import constants
from spectral_core.norms import c_norm_sq, l2_norm_sq
from spectral_core.scaling import ScaleVariant, scale_field

logger = logging.getLogger(__name__)


class Membership(str, Enum):
    INSIDE = 'inside'
    BOUNDARY_MASS = 'boundary_mass'
    OUTSIDE_MASS = 'outside_mass'
    OUTSIDE_ENERGY = 'outside_energy'
    UNDEFINED = 'undefined'

    @property
    def feasible(self):
        return self not in (
            Membership.OUTSIDE_MASS,
            Membership.OUTSIDE_ENERGY,
            Membership.UNDEFINED,
        )


@dataclass(frozen=True)
class ConstraintCheck:
    membership: Membership
    mass: float
    c_norm_sq: float
    cap_sq: Optional[float]

    @property
    def cap_applicable(self):
        return self.cap_sq is not None

    @property
    def mass_ok(self):
        return self.mass <= 1.0 + UNIT_MASS_TOL


def in_constraint_set(u):
    """Classify ``u`` against ||u||_{L^2} <= 1 and ||u||_c < c^s.

    Unit mass under the cap is INSIDE, mass below one is BOUNDARY_MASS and
    mass above one is OUTSIDE_MASS. Without the cap (p <= 8/3) the
    classification is by mass only and ``cap_applicable`` is False.
    Norms that overflow are UNDEFINED.
    """
    grid = u.grid
    mass = l2_norm_sq(u)
    norm_sq = c_norm_sq(u)
    s_exp = constants(grid.p).s_exp
    cap_sq = None if s_exp is None else grid.c ** (2.0 * s_exp)
    if not (math.isfinite(mass) and math.isfinite(norm_sq)):
        membership = Membership.UNDEFINED
    elif mass > 1.0 + UNIT_MASS_TOL:
        membership = Membership.OUTSIDE_MASS
    elif cap_sq is not None and norm_sq >= cap_sq:
        membership = Membership.OUTSIDE_ENERGY
    elif mass < 1.0 - UNIT_MASS_TOL:
        membership = Membership.BOUNDARY_MASS
    else:
        membership = Membership.INSIDE
    return ConstraintCheck(
        membership=membership, mass=mass, c_norm_sq=norm_sq, cap_sq=cap_sq
    )


def tau_c_duality_check(u, c):
    """Relative defect of I^{C/c, tau/c}(T_c u) = c^{-2} I^{C, tau}(u) for
    the mass-preserving rescale T_c; C is the speed of light of ``u``."""
    if c < 1:
        raise ValidationError(f'Duality check needs c >= 1, got {c!r}.')
    reference = c ** -2 * energy(u).total
    scaled = scale_field(u, ScaleVariant.MASS, c)
    defect = abs(energy(scaled).total - reference) / abs(reference)
    logger.debug('Duality defect at c=%g: %.3e', c, defect)
    return defect
