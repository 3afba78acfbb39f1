"""Distance from a two-component orbital to the ground-state orbit."""
import logging
from dataclasses import dataclass

import numpy as np

from core.constants import DEGENERATE_FIT_MASS
from core.exceptions import DegenerateFit
from nls_limit.su2 import SU2Element, su2_act
from spectral_core.norms import l2_norm_sq, sobolev_norm
from spectral_core.scaling import peak_position, translate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitFit:
    distance: float
    element: SU2Element
    shift: np.ndarray
    weight: float

    @property
    def degenerate(self):
        return self.weight < DEGENERATE_FIT_MASS


def orbit_distance(f, model, strict=True, reference=None):
    """H^1 distance between f(. + shift) and gamma.(h, 0).

    The shift puts the density peak of ``f`` on that of h; gamma comes
    from the projections of both components on h. ``reference`` replaces
    the sampled h, typically by the minimizer on the same lattice.
    """
    if reference is None:
        reference = model.pair(f.grid, tau=f.grid.tau)
    else:
        reference = reference.with_grid(f.grid)
    shift = peak_position(f) - peak_position(reference)
    aligned = translate(f, shift)
    h = reference.data[0]
    weight_h = f.grid.cell_volume / l2_norm_sq(reference)
    a = weight_h * np.vdot(h, aligned.data[0])
    b = weight_h * np.vdot(h, aligned.data[1])
    weight = float(abs(a) ** 2 + abs(b) ** 2)
    if weight > 0:
        element = SU2Element.from_coefficients(a, b)
    else:
        element = SU2Element.identity()
    distance = sobolev_norm(aligned - su2_act(element, reference), 1.0)
    fit = OrbitFit(
        distance=float(distance),
        element=element,
        shift=shift,
        weight=weight,
    )
    if fit.degenerate:
        logger.warning(
            'Orbit fit is degenerate: |a|^2 + |b|^2 = %.3e', weight
        )
        if strict:
            raise DegenerateFit(
                f'Orbital is far from the ground-state orbit '
                f'(|a|^2 + |b|^2 = {weight:.3e}).',
                fit=fit,
            )
    return fit
