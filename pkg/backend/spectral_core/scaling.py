"""Scaling isometries, spectral resampling and translations."""
from enum import Enum

import numpy as np

from core.validators import validate_positive
from spectral_core.grid import frequency_axis, multipliers


class ScaleVariant(str, Enum):
    ENERGY = 'energy'
    MASS = 'mass'


def _interpolation_matrix(n, box, points):
    """Trigonometric interpolation from the n-point lattice on [-box, box)
    to ``points``; rows outside the source box are zero."""
    k = frequency_axis(n, box)
    spacing = 2.0 * box / n
    nodes = -box + spacing * np.arange(n)
    phase = np.exp(1j * np.outer(points + box, k))
    # Nyquist mode split symmetrically.
    nyquist = n // 2
    phase[:, nyquist] = np.cos(k[nyquist] * (points + box))
    analysis = np.exp(-1j * np.outer(k, nodes + box))
    matrix = phase @ analysis / n
    outside = (points < -box - 1e-12 * box) | (points >= box - 1e-12 * box)
    matrix[outside] = 0.0
    return matrix


def resample(u, grid):
    """Spectrally exact resampling of ``u`` onto another lattice."""
    if u.grid.same_lattice(grid):
        return u.with_grid(grid)
    matrix = _interpolation_matrix(u.grid.n, u.grid.box, grid.axis())
    data = u.data
    for axis in (1, 2, 3):
        data = np.moveaxis(
            np.tensordot(matrix, data, axes=([1], [axis])), 0, axis
        )
    return type(u)(data, grid)


def natural_scaled_grid(grid, variant, c):
    tau = grid.tau
    if ScaleVariant(variant) is ScaleVariant.MASS and grid.tau / c <= 1:
        tau = grid.tau / c
    return grid.replace(box=grid.box * c, c=grid.c / c, tau=tau)


def scale_field(u, variant, c, target=None):
    """T_c u(x) = c^{-1/2} u(x/c) (energy) or c^{-3/2} u(x/c) (mass).

    The scaled field lives on the lattice with box half-width c*box and the
    speed of light divided by c, where ||T_c u|| in that norm equals
    ||u||_c. ``target`` resamples the result onto another grid.
    """
    validate_positive(c, 'c')
    variant = ScaleVariant(variant)
    power = 0.5 if variant is ScaleVariant.ENERGY else 1.5
    grid = natural_scaled_grid(u.grid, variant, c)
    scaled = type(u)(u.data * c ** -power, grid)
    if target is not None:
        return resample(scaled, target)
    return scaled


def translate(u, shift):
    """u(. + shift) through a Fourier phase."""
    xi = multipliers(u.grid).xi
    phase = np.exp(1j * sum(x * s for x, s in zip(xi, shift)))
    return type(u).from_spectrum(phase * u.spectrum(), u.grid)


def peak_position(u):
    """Location of the density maximum with a quadratic sub-grid
    refinement along each axis."""
    density = np.sum(np.abs(u.data) ** 2, axis=0)
    index = np.unravel_index(np.argmax(density), density.shape)
    grid = u.grid
    position = []
    for axis in range(3):
        centre = density[index]
        neighbours = []
        for step in (-1, 1):
            neighbour = list(index)
            neighbour[axis] = (neighbour[axis] + step) % grid.n
            neighbours.append(density[tuple(neighbour)])
        left, right = neighbours
        curvature = left - 2.0 * centre + right
        offset = 0.0
        if curvature < 0:
            offset = 0.5 * (left - right) / curvature
        position.append(
            -grid.box + grid.spacing * (index[axis] + offset)
        )
    return np.array(position)
