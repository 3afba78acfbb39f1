"""Discrete L^2, energy and Sobolev norms.

Physical-space sums carry the weight h^3; Fourier-space sums carry
h^3 / N^3 so that both agree by Parseval.
"""
import numpy as np

from core.validators import validate_sobolev_order
from spectral_core.grid import multipliers


def _spectral_weight(grid):
    return grid.cell_volume / grid.n ** 3


def inner(u, v):
    """Discrete L^2 inner product, conjugate-linear in ``u``."""
    return u.grid.cell_volume * np.vdot(u.data, v.data)


def l2_norm_sq(u):
    return u.grid.cell_volume * float(np.sum(np.abs(u.data) ** 2))


def l2_norm(u):
    return np.sqrt(l2_norm_sq(u))


def spectral_l2_norm(u):
    power = np.abs(u.spectrum()) ** 2
    return np.sqrt(_spectral_weight(u.grid) * float(np.sum(power)))


def weighted_norm_sq(u, weight, coeffs=None):
    if coeffs is None:
        coeffs = u.spectrum()
    power = np.sum(np.abs(coeffs) ** 2, axis=0)
    return _spectral_weight(u.grid) * float(np.sum(weight * power))


def c_norm_sq(u, coeffs=None):
    """||u||_c^2 = sum lambda_c(xi) |u^(xi)|^2."""
    return weighted_norm_sq(u, multipliers(u.grid).lam, coeffs)


def sobolev_norm(u, s):
    validate_sobolev_order(s)
    weight = (1.0 + multipliers(u.grid).xi_sq) ** s
    return np.sqrt(weighted_norm_sq(u, weight))


def gradient_norm(u):
    return np.sqrt(weighted_norm_sq(u, multipliers(u.grid).xi_sq))


def h_half_distance(u, v):
    return sobolev_norm(u - v, 0.5)


def normalize(u):
    norm = l2_norm(u)
    if norm == 0:
        raise ZeroDivisionError('Cannot normalize the zero field.')
    return u / norm
