from nls_limit.flow import flow_multiplier, nls_ground_flow
from nls_limit.model import (
    LimitModel,
    build_h,
    build_limit_model,
    e_inf,
    limit_grid,
    nls_energy,
    nu_formula,
    sample_profile,
    up_mass_from_nu,
)
from nls_limit.orbit import OrbitFit, orbit_distance
from nls_limit.radial import (
    RadialProfile,
    export_profile_csv,
    ode_residual,
    solve_up,
)
from nls_limit.su2 import SU2Element, su2_act

__all__ = [
    'LimitModel',
    'OrbitFit',
    'RadialProfile',
    'SU2Element',
    'build_h',
    'build_limit_model',
    'e_inf',
    'export_profile_csv',
    'flow_multiplier',
    'limit_grid',
    'nls_energy',
    'nls_ground_flow',
    'nu_formula',
    'ode_residual',
    'orbit_distance',
    'sample_profile',
    'solve_up',
    'su2_act',
    'up_mass_from_nu',
]
