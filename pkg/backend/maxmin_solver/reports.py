from dataclasses import dataclass, field
from typing import Any, Optional

from functionals.energy import el_residual, energy, pohozaev_residual
from spectral_core.fields import SpinorField


@dataclass
class SolveReport:
    """Converged state of a ground-state solve and its residuals."""
    ground_state: SpinorField
    omega: float
    energy: float
    el_residual: float
    pohozaev: float
    history: list = field(default_factory=list)
    iterations: int = 0
    converged: bool = True
    solver: str = 'maxmin'
    positive_direction: Optional[SpinorField] = None
    inner: Optional[Any] = None

    @property
    def grid(self):
        return self.ground_state.grid

    @property
    def gap(self):
        return self.grid.rest_energy - self.omega


def build_report(u, omega, tau=None, **kwargs):
    return SolveReport(
        ground_state=u,
        omega=omega,
        energy=energy(u, tau).total,
        el_residual=el_residual(u, omega, tau),
        pohozaev=pohozaev_residual(u, tau),
        **kwargs,
    )
