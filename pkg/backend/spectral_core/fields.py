import numbers

import numpy as np
from django.core.exceptions import ValidationError

from spectral_core.grid import backward, forward


class Field:
    """Value-semantic multi-component field sampled on a GridSpec.

    ``data`` has shape (components, n, n, n) with axes (x, y, z).
    """
    components = None

    def __init__(self, data, grid):
        data = np.asarray(data, dtype=np.complex128)
        expected = (self.components,) + grid.shape
        if data.shape != expected:
            raise ValidationError(
                f'{type(self).__name__} expects shape {expected}, '
                f'got {data.shape}.'
            )
        if not np.all(np.isfinite(data)):
            raise ValidationError(
                f'{type(self).__name__} contains non-finite entries.'
            )
        self.data = data
        self.grid = grid

    @classmethod
    def zeros(cls, grid):
        return cls(np.zeros((cls.components,) + grid.shape), grid)

    @classmethod
    def from_spectrum(cls, coeffs, grid):
        return cls(backward(coeffs), grid)

    def spectrum(self):
        return forward(self.data)

    def copy(self):
        return type(self)(self.data.copy(), self.grid)

    def with_grid(self, grid):
        if not self.grid.same_lattice(grid):
            raise ValidationError('Grids have different lattices.')
        return type(self)(self.data, grid)

    def modulus(self):
        return np.sqrt(np.sum(np.abs(self.data) ** 2, axis=0))

    def _check_other(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if not self.grid.same_lattice(other.grid):
            raise ValidationError('Fields live on different lattices.')
        return other

    def __add__(self, other):
        if self._check_other(other) is NotImplemented:
            return NotImplemented
        return type(self)(self.data + other.data, self.grid)

    def __sub__(self, other):
        if self._check_other(other) is NotImplemented:
            return NotImplemented
        return type(self)(self.data - other.data, self.grid)

    def __neg__(self):
        return type(self)(-self.data, self.grid)

    def __mul__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return type(self)(scalar * self.data, self.grid)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return type(self)(self.data / scalar, self.grid)

    def __repr__(self):
        return f'{type(self).__name__}(n={self.grid.n}, box={self.grid.box})'


class PairField(Field):
    """C^2-valued field: upper/lower spinor pairs and Schroedinger orbitals."""
    components = 2


class SpinorField(Field):
    """C^4-valued Dirac spinor."""
    components = 4

    @classmethod
    def from_pair(cls, upper, lower=None):
        lower_data = (
            np.zeros_like(upper.data) if lower is None else lower.data
        )
        return cls(np.concatenate([upper.data, lower_data]), upper.grid)

    def upper(self):
        return PairField(self.data[:2], self.grid)

    def lower(self):
        return PairField(self.data[2:], self.grid)


def gaussian_spinor(grid, width=1.0, polarization=(1, 0, 0, 0),
                    centre=(0.0, 0.0, 0.0)):
    """L^2-normalized Gaussian exp(-|x - centre|^2 / (2 width^2)) times a
    constant C^4 polarization."""
    x1, x2, x3 = grid.coordinates()
    r_sq = (
        (x1 - centre[0]) ** 2 + (x2 - centre[1]) ** 2 + (x3 - centre[2]) ** 2
    )
    profile = np.exp(-0.5 * r_sq / width ** 2)
    vector = np.asarray(polarization, dtype=np.complex128)
    data = vector[:, None, None, None] * profile[None]
    norm = np.sqrt(grid.cell_volume * np.sum(np.abs(data) ** 2))
    return SpinorField(data / norm, grid)
