from functionals.constraints import (
    ConstraintCheck,
    Membership,
    in_constraint_set,
    tau_c_duality_check,
)
from functionals.energy import (
    EnergyBreakdown,
    el_residual,
    energy,
    l2_gradient,
    multiplier,
    nonlinear_mass,
    nonlinearity,
    pohozaev_residual,
)
from functionals.model import ModelConstants, constants, scaled_energy

__all__ = [
    'ConstraintCheck',
    'EnergyBreakdown',
    'Membership',
    'ModelConstants',
    'constants',
    'el_residual',
    'energy',
    'in_constraint_set',
    'l2_gradient',
    'multiplier',
    'nonlinear_mass',
    'nonlinearity',
    'pohozaev_residual',
    'scaled_energy',
    'tau_c_duality_check',
]
