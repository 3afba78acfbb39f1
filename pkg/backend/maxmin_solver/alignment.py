"""Phase and translation alignment of spinors before comparing them."""
import numpy as np

from spectral_core.norms import h_half_distance, inner
from spectral_core.scaling import peak_position, translate


def align_phase(u, reference):
    """Rotate ``u`` by a global phase so that <reference, u> >= 0."""
    overlap = inner(reference, u)
    if overlap == 0:
        return u
    return u * np.exp(-1j * np.angle(overlap))


def align(u, reference, translate_peak=True):
    """Move the density peak of ``u`` onto that of ``reference``, then fix
    the global phase."""
    if translate_peak:
        shift = peak_position(u) - peak_position(reference)
        u = translate(u, shift)
    return align_phase(u, reference)


def aligned_distance(u, reference, translate_peak=True):
    """H^{1/2} distance after alignment."""
    return h_half_distance(align(u, reference, translate_peak), reference)
