"""Fourier-side algebra of the free Dirac operator.

Every operator acts mode by mode on the spectrum of a SpinorField. The
4x4 symbol is never stored: its action is written through sigma.xi on the
upper and lower pairs.
"""
from enum import Enum

import numpy as np

from core.exceptions import GapViolation
from spectral_core.fields import SpinorField
from spectral_core.grid import multipliers

SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)
BETA = np.diag([1.0, 1.0, -1.0, -1.0]).astype(np.complex128)
ALPHA = np.array(
    [np.block([[np.zeros((2, 2)), s], [s, np.zeros((2, 2))]]) for s in SIGMA]
)


class Sign(str, Enum):
    PLUS = '+'
    MINUS = '-'

    @property
    def factor(self):
        return 1.0 if self is Sign.PLUS else -1.0


class Direction(str, Enum):
    FORWARD = 'forward'
    INVERSE = 'inverse'


def dirac_symbol(xi, grid):
    """Dense 4x4 symbol [[mc^2 I, c sigma.xi], [c sigma.xi, -mc^2 I]]."""
    xi = np.asarray(xi, dtype=float)
    rest = grid.rest_energy
    sxi = grid.c * np.einsum('k,kij->ij', xi, SIGMA)
    eye = np.eye(2)
    return np.block([[rest * eye, sxi], [sxi, -rest * eye]])


def sigma_dot(xi, pair):
    """(sigma.xi) applied to a stack of C^2 coefficients."""
    x1, x2, x3 = xi
    a, b = pair[0], pair[1]
    return np.stack([
        x3 * a + (x1 - 1j * x2) * b,
        (x1 + 1j * x2) * a - x3 * b,
    ])


def _alpha_dot(xi, coeffs):
    return np.concatenate(
        [sigma_dot(xi, coeffs[2:]), sigma_dot(xi, coeffs[:2])]
    )


def _beta(coeffs):
    return np.concatenate([coeffs[:2], -coeffs[2:]])


def symbol_action(grid, coeffs):
    mult = multipliers(grid)
    return (
        grid.rest_energy * _beta(coeffs)
        + grid.c * _alpha_dot(mult.xi, coeffs)
    )


def apply_dirac(u):
    coeffs = symbol_action(u.grid, u.spectrum())
    return SpinorField.from_spectrum(coeffs, u.grid)


def apply_abs_dirac(u):
    lam = multipliers(u.grid).lam
    return SpinorField.from_spectrum(lam * u.spectrum(), u.grid)


def project_coefficients(grid, coeffs, sign):
    lam = multipliers(grid).lam
    shifted = symbol_action(grid, coeffs) / lam
    return 0.5 * (coeffs + Sign(sign).factor * shifted)


def project(u, sign):
    """Spectral projection P_c^{+/-}."""
    coeffs = project_coefficients(u.grid, u.spectrum(), sign)
    return SpinorField.from_spectrum(coeffs, u.grid)


def project_infinity(u, sign):
    """P_inf^+ keeps the upper pair, P_inf^- the lower pair."""
    data = u.data.copy()
    if Sign(sign) is Sign.PLUS:
        data[2:] = 0
    else:
        data[:2] = 0
    return SpinorField(data, u.grid)


def fw_coefficients(grid, coeffs, direction):
    mult = multipliers(grid)
    # beta (alpha.n) with n = xi/|xi|.
    rotated = _beta(_alpha_dot(mult.unit, coeffs))
    sign = 1.0 if Direction(direction) is Direction.FORWARD else -1.0
    return mult.ups_plus * coeffs + sign * mult.ups_minus * rotated


def fw_transform(u, direction):
    """Foldy-Wouthuysen transform U_FW (forward) or its inverse."""
    coeffs = fw_coefficients(u.grid, u.spectrum(), direction)
    return SpinorField.from_spectrum(coeffs, u.grid)


def resolvent_coefficients(grid, coeffs, omega, shift=0.0):
    z = omega - shift
    rest = grid.rest_energy
    if abs(z) >= rest:
        raise GapViolation(
            f'Resolvent point {z:.6g} is outside the gap (-{rest:.6g}, '
            f'{rest:.6g}).'
        )
    mult = multipliers(grid)
    # (D - z)^{-1} = (D + z) / (lam^2 - z^2) since D^2 = lam^2.
    denominator = (mult.lam - z) * (mult.lam + z)
    return (symbol_action(grid, coeffs) + z * coeffs) / denominator


def apply_resolvent(u, omega, shift=0.0):
    """(D_c - omega + shift)^{-1} u."""
    coeffs = resolvent_coefficients(u.grid, u.spectrum(), omega, shift)
    return SpinorField.from_spectrum(coeffs, u.grid)
