"""Positive radial solution of -U'' - (2/r) U' + U = U^{p-1} by shooting.

The central value U(0) is bisected between undershooting trajectories (U'
turns positive while U > 0) and overshooting ones (U crosses zero). The
shooting part is kept where the bracketing trajectories still agree; the
tail beyond that radius is integrated inwards from r_max on the decaying
branch and matched in value.
"""
import csv
import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import simpson, solve_ivp
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from core.constants import (
    CSV_PRECISION,
    P_RADIAL_MAX,
    RADIAL_ATOL,
    RADIAL_POINTS,
    RADIAL_R_MAX,
    RADIAL_RTOL,
    SHOOT_BRACKET,
    SHOOT_WIDTH,
)
from core.exceptions import NoBracket
from core.validators import validate_exponent

logger = logging.getLogger(__name__)

START_RADIUS = 1e-6
TAIL_AGREEMENT = 1e-9
TAIL_FLOOR_ATOL = 1e-300
FD_STENCIL = 2


@dataclass(frozen=True)
class RadialProfile:
    p: float
    r_max: float
    radii: np.ndarray
    samples: np.ndarray
    slopes: np.ndarray
    junction: float
    mass_l2: float

    @property
    def central_value(self):
        return float(self.samples[0])

    @property
    def spacing(self):
        return float(self.radii[1] - self.radii[0])

    @cached_property
    def spline(self):
        return CubicSpline(
            self.radii,
            self.samples,
            bc_type=((1, 0.0), (1, float(self.slopes[-1]))),
        )

    def __call__(self, r):
        """U_p at arbitrary radii; exponential-Yukawa tail past r_max."""
        r = np.asarray(r, dtype=float)
        spline = self.spline
        inside = r <= self.r_max
        values = np.empty_like(r)
        values[inside] = spline(r[inside])
        far = r[~inside]
        values[~inside] = (
            self.samples[-1] * self.r_max / far
            * np.exp(-(far - self.r_max))
        )
        return values


def _rhs(p):
    def rhs(r, y):
        u, du = y
        return [du, -2.0 * du / r + u - np.abs(u) ** (p - 2.0) * u]
    return rhs


def _overshoot(r, y):
    return y[0]


_overshoot.terminal = True
_overshoot.direction = -1


def _undershoot(r, y):
    return y[1]


_undershoot.terminal = True
_undershoot.direction = 1


def _series_start(u0, p):
    """U ~ U0 + b r^2 / 2 near the origin with 3b = U0 - U0^{p-1}."""
    b = (u0 - u0 ** (p - 1.0)) / 3.0
    return [u0 + 0.5 * b * START_RADIUS ** 2, b * START_RADIUS]


def shoot(u0, p, r_max=RADIAL_R_MAX):
    """Integrate from U(0) = u0; returns (overshoots, solution)."""
    solution = solve_ivp(
        _rhs(p),
        (START_RADIUS, r_max),
        _series_start(u0, p),
        method='RK45',
        rtol=RADIAL_RTOL,
        atol=RADIAL_ATOL,
        events=(_overshoot, _undershoot),
        dense_output=True,
    )
    overshoots = solution.t_events[0].size > 0
    return overshoots, solution


def _end_radius(solution):
    return float(solution.t[-1])


def _match_radius(low, high, u0):
    end = min(_end_radius(low), _end_radius(high))
    mesh = np.linspace(START_RADIUS, end, 20001)
    gap = np.abs(low.sol(mesh)[0] - high.sol(mesh)[0])
    bad = np.nonzero(gap > TAIL_AGREEMENT * u0)[0]
    if bad.size == 0:
        return end
    return float(mesh[max(bad[0] - 1, 0)])


def _inward_tail(p, r_match, r_max, amplitude):
    y_end = amplitude * np.exp(-r_max) / r_max
    return solve_ivp(
        _rhs(p),
        (r_max, r_match),
        [y_end, -y_end * (1.0 + 1.0 / r_max)],
        method='RK45',
        rtol=RADIAL_RTOL,
        atol=TAIL_FLOOR_ATOL,
        dense_output=True,
    )


def _fit_tail(p, r_match, r_max, target):
    guess = target * r_match * np.exp(r_match)

    def mismatch(log_amplitude):
        tail = _inward_tail(p, r_match, r_max, np.exp(log_amplitude))
        return tail.y[0, -1] - target

    log_guess = np.log(guess)
    log_amplitude = brentq(
        mismatch, log_guess - 1.0, log_guess + 1.0, xtol=1e-14
    )
    return _inward_tail(p, r_match, r_max, np.exp(log_amplitude))


def solve_up(p, tol=SHOOT_WIDTH, r_max=RADIAL_R_MAX, points=RADIAL_POINTS,
             bracket=SHOOT_BRACKET):
    """Ground state U_p of the scalar field equation."""
    validate_exponent(p, upper=P_RADIAL_MAX)
    low, high = bracket
    over_low, low_solution = shoot(low, p, r_max)
    over_high, high_solution = shoot(high, p, r_max)
    if over_low or not over_high:
        raise NoBracket(
            f'U(0) in [{low}, {high}] does not bracket the ground state '
            f'for p={p}.'
        )
    while high - low > tol:
        middle = 0.5 * (low + high)
        overshoots, solution = shoot(middle, p, r_max)
        if overshoots:
            high, high_solution = middle, solution
        else:
            low, low_solution = middle, solution
    u0 = 0.5 * (low + high)
    r_match = _match_radius(low_solution, high_solution, u0)

    radii = np.linspace(0.0, r_max, points)
    samples = np.empty_like(radii)
    slopes = np.empty_like(radii)
    core = radii <= r_match
    inner_r = np.maximum(radii[core], START_RADIUS)
    values = 0.5 * (low_solution.sol(inner_r) + high_solution.sol(inner_r))
    samples[core], slopes[core] = values
    samples[0], slopes[0] = u0, 0.0
    target = 0.5 * (
        low_solution.sol(r_match)[0] + high_solution.sol(r_match)[0]
    )
    tail = _fit_tail(p, r_match, r_max, target)
    tail_values = tail.sol(radii[~core])
    samples[~core], slopes[~core] = tail_values
    mass_l2 = float(
        np.sqrt(4.0 * np.pi * simpson(radii ** 2 * samples ** 2, x=radii))
    )
    logger.info(
        'Radial ground state p=%g: U(0)=%.15g, ||U||=%.12g, match at r=%.3f',
        p, u0, mass_l2, r_match,
    )
    return RadialProfile(
        p=p,
        r_max=r_max,
        radii=radii,
        samples=samples,
        slopes=slopes,
        junction=r_match,
        mass_l2=mass_l2,
    )


def ode_residual(profile, skip=FD_STENCIL + 1):
    """Sup-norm of U'' + (2/r) U' - U + U^{p-1} on the mesh.

    U'' is the fourth-order central difference of the sampled U'. Nodes
    next to the origin, the matching radius and the mesh ends are
    excluded.
    """
    r, u, du = profile.radii, profile.samples, profile.slopes
    dr = profile.spacing
    d2u = np.full_like(u, np.nan)
    d2u[2:-2] = (
        -du[4:] + 8.0 * du[3:-1] - 8.0 * du[1:-3] + du[:-4]
    ) / (12.0 * dr)
    residual = np.full_like(u, np.nan)
    interior = slice(skip, -FD_STENCIL)
    residual[interior] = (
        d2u[interior]
        + 2.0 * du[interior] / r[interior]
        - u[interior]
        + np.abs(u[interior]) ** (profile.p - 2.0) * u[interior]
    )
    near_junction = np.abs(r - profile.junction) <= (FD_STENCIL + 1) * dr
    residual[near_junction] = np.nan
    return float(np.nanmax(np.abs(residual)))


def export_profile_csv(profile, path):
    """Two-column CSV (r, U_p(r))."""
    with open(path, 'w', encoding='utf-8', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(('r', 'U'))
        for r, u in zip(profile.radii, profile.samples):
            writer.writerow(
                (f'{r:.{CSV_PRECISION}g}', f'{u:.{CSV_PRECISION}g}')
            )
