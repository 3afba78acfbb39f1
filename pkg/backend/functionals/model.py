"""Exponents attached to the power nonlinearity."""
from dataclasses import dataclass
from typing import Optional

from core.constants import P_SUPERCRITICAL
from core.validators import validate_exponent


@dataclass(frozen=True)
class ModelConstants:
    p: float
    zeta: float
    theta: float
    s_exp: Optional[float]

    @property
    def supercritical(self):
        return self.s_exp is not None


def constants(p):
    """zeta = 5 - 3p/2, theta = 3 zeta / (2 - zeta) and the cap exponent
    s = (3p - 7) / (6p - 16), the latter only for p > 8/3."""
    validate_exponent(p)
    zeta = 5.0 - 1.5 * p
    theta = 3.0 * zeta / (2.0 - zeta)
    s_exp = None
    if p > P_SUPERCRITICAL:
        s_exp = (3.0 * p - 7.0) / (6.0 * p - 16.0)
    return ModelConstants(p=p, zeta=zeta, theta=theta, s_exp=s_exp)


def coupling(p, tau):
    """tau^zeta, the weight of the nonlinear term."""
    if tau == 0:
        return 0.0
    return tau ** constants(p).zeta


def scaled_energy(tau, e, p):
    """E_c(tau) = tau^theta e_c(tau)."""
    return tau ** constants(p).theta * e
