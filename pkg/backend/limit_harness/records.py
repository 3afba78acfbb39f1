"""Per-c sweep rows."""
import math
from dataclasses import asdict, dataclass

COLUMNS = (
    'c',
    'omega_c',
    'gap',
    'e_c',
    'g_norm_s0',
    'g_norm_s1',
    'g_norm_s1_5',
    'g_norm_s2',
    'neg_l2',
    'neg_grad_l2',
    'orbit_dist',
    'pohozaev',
    'el_residual',
    'decay_delta_plus',
    'decay_ratio_minus',
    'h2_norm',
    'wall_time',
    'energy_defect',
    'closure_residual',
    'outer_iters',
)

G_NORM_COLUMNS = {
    0.0: 'g_norm_s0',
    1.0: 'g_norm_s1',
    1.5: 'g_norm_s1_5',
    2.0: 'g_norm_s2',
}


@dataclass(frozen=True)
class SweepRecord:
    c: float
    omega_c: float
    gap: float
    e_c: float
    g_norm_s0: float
    g_norm_s1: float
    g_norm_s1_5: float
    g_norm_s2: float
    neg_l2: float
    neg_grad_l2: float
    orbit_dist: float
    pohozaev: float
    el_residual: float
    decay_delta_plus: float
    decay_ratio_minus: float
    h2_norm: float
    wall_time: float
    energy_defect: float
    closure_residual: float
    outer_iters: float

    @property
    def g_norms(self):
        return {s: getattr(self, name) for s, name in G_NORM_COLUMNS.items()}

    def as_row(self):
        return tuple(getattr(self, name) for name in COLUMNS)

    def as_dict(self):
        return asdict(self)

    @classmethod
    def from_row(cls, row):
        return cls(**{name: float(value) for name, value in row.items()})

    def as_model_fields(self):
        """NaN is stored as NULL."""
        return {
            name: None if math.isnan(value) else value
            for name, value in self.as_dict().items()
        }

