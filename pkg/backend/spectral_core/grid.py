"""Periodic grid, frequency lattice and cached Fourier multipliers."""
import dataclasses
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from django.conf import settings
from scipy import fft as sp_fft

from core.validators import (
    validate_exponent,
    validate_points,
    validate_positive,
    validate_tau,
)


@dataclass(frozen=True)
class GridSpec:
    """Box [-box, box)^3 sampled with ``n`` points per axis plus the
    physical parameters of the model."""
    n: int
    box: float
    m: float = 1.0
    c: float = 1.0
    p: float = 2.5
    tau: float = 1.0

    def __post_init__(self):
        validate_points(self.n)
        validate_positive(self.box, 'box')
        validate_positive(self.m, 'm')
        validate_positive(self.c, 'c')
        validate_exponent(self.p)
        validate_tau(self.tau)

    @property
    def spacing(self):
        return 2.0 * self.box / self.n

    @property
    def cell_volume(self):
        return self.spacing ** 3

    @property
    def rest_energy(self):
        return self.m * self.c ** 2

    @property
    def shape(self):
        return (self.n, self.n, self.n)

    def axis(self):
        return -self.box + self.spacing * np.arange(self.n)

    def coordinates(self):
        x = self.axis()
        return x[:, None, None], x[None, :, None], x[None, None, :]

    def radius(self):
        x1, x2, x3 = self.coordinates()
        return np.sqrt(x1 ** 2 + x2 ** 2 + x3 ** 2)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def same_lattice(self, other):
        return self.n == other.n and math.isclose(
            self.box, other.box, rel_tol=1e-14
        )


@dataclass(frozen=True)
class Multipliers:
    xi: tuple
    xi_sq: np.ndarray
    xi_abs: np.ndarray
    unit: tuple
    lam: np.ndarray
    kinetic: np.ndarray
    ups_plus: np.ndarray
    ups_minus: np.ndarray


def frequency_axis(n, box):
    return 2.0 * np.pi * sp_fft.fftfreq(n, d=2.0 * box / n)


@lru_cache(maxsize=32)
def _multipliers(n, box, m, c):
    k = frequency_axis(n, box)
    xi = (k[:, None, None], k[None, :, None], k[None, None, :])
    xi_sq = xi[0] ** 2 + xi[1] ** 2 + xi[2] ** 2
    xi_abs = np.sqrt(xi_sq)
    safe = np.where(xi_abs > 0, xi_abs, 1.0)
    # n = xi/|xi| with n(0) = 0.
    unit = tuple(np.where(xi_abs > 0, x / safe, 0.0) for x in xi)
    rest = m * c ** 2
    lam = np.sqrt(rest ** 2 + c ** 2 * xi_sq)
    kinetic = c ** 2 * xi_sq / (lam + rest)
    ups_plus = np.sqrt(0.5 * (1.0 + rest / lam))
    ups_minus = np.sqrt(0.5 * kinetic / lam)
    for array in (xi_sq, xi_abs, lam, kinetic, ups_plus, ups_minus):
        array.setflags(write=False)
    return Multipliers(
        xi=xi,
        xi_sq=xi_sq,
        xi_abs=xi_abs,
        unit=unit,
        lam=lam,
        kinetic=kinetic,
        ups_plus=ups_plus,
        ups_minus=ups_minus,
    )


def multipliers(grid):
    return _multipliers(grid.n, grid.box, grid.m, grid.c)


def fft_workers():
    if not settings.configured:
        return 1
    return getattr(settings, 'NDGS', {}).get('FFT_WORKERS', 1)


def forward(data):
    return sp_fft.fftn(data, axes=(-3, -2, -1), workers=fft_workers())


def backward(coeffs):
    return sp_fft.ifftn(coeffs, axes=(-3, -2, -1), workers=fft_workers())
