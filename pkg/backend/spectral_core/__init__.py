from spectral_core.fields import (
    PairField,
    SpinorField,
    gaussian_spinor,
)
from spectral_core.grid import GridSpec, multipliers
from spectral_core.norms import (
    c_norm_sq,
    h_half_distance,
    inner,
    l2_norm,
    normalize,
    sobolev_norm,
)
from spectral_core.operators import (
    Direction,
    Sign,
    apply_abs_dirac,
    apply_dirac,
    apply_resolvent,
    dirac_symbol,
    fw_transform,
    project,
    project_infinity,
)
from spectral_core.scaling import (
    ScaleVariant,
    peak_position,
    resample,
    scale_field,
    translate,
)

__all__ = [
    'Direction',
    'GridSpec',
    'PairField',
    'ScaleVariant',
    'Sign',
    'SpinorField',
    'apply_abs_dirac',
    'apply_dirac',
    'apply_resolvent',
    'c_norm_sq',
    'dirac_symbol',
    'fw_transform',
    'gaussian_spinor',
    'h_half_distance',
    'inner',
    'l2_norm',
    'multipliers',
    'normalize',
    'peak_position',
    'project',
    'project_infinity',
    'resample',
    'sobolev_norm',
    'scale_field',
    'translate',
]
