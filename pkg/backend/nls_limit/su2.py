from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError

SU2_TOL = 1e-12


@dataclass(frozen=True)
class SU2Element:
    """(alpha, -conj(beta); beta, conj(alpha)), |alpha|^2 + |beta|^2 = 1."""
    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > SU2_TOL:
            raise ValidationError(
                f'|alpha|^2 + |beta|^2 must be 1, got {norm!r}.'
            )

    @classmethod
    def identity(cls):
        return cls(1.0 + 0j, 0j)

    @classmethod
    def from_coefficients(cls, alpha, beta):
        norm = np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        return cls(complex(alpha / norm), complex(beta / norm))

    @classmethod
    def random(cls, rng):
        vector = rng.normal(size=4)
        vector /= np.linalg.norm(vector)
        return cls.from_coefficients(
            vector[0] + 1j * vector[1], vector[2] + 1j * vector[3]
        )

    def matrix(self):
        return np.array([
            [self.alpha, -np.conj(self.beta)],
            [self.beta, np.conj(self.alpha)],
        ])

    def __matmul__(self, other):
        product = self.matrix() @ other.matrix()
        return SU2Element.from_coefficients(product[0, 0], product[1, 0])


def su2_act(g, f):
    """gamma.(z, w) = (alpha z - conj(beta) w, beta z + conj(alpha) w)."""
    z, w = f.data[0], f.data[1]
    data = np.stack([
        g.alpha * z - np.conj(g.beta) * w,
        g.beta * z + np.conj(g.alpha) * w,
    ])
    return type(f)(data, f.grid)
