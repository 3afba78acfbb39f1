from maxmin_solver.alignment import align, align_phase, aligned_distance
from maxmin_solver.inner import InnerResult, inner_maximize, reduced_energy
from maxmin_solver.outer import (
    Seed,
    envelope_gradient,
    fw_embedding,
    outer_minimize,
)
from maxmin_solver.reports import SolveReport
from maxmin_solver.scf import scf_oracle

__all__ = [
    'InnerResult',
    'Seed',
    'SolveReport',
    'align',
    'align_phase',
    'aligned_distance',
    'envelope_gradient',
    'fw_embedding',
    'inner_maximize',
    'outer_minimize',
    'reduced_energy',
    'scf_oracle',
]
