"""Exact and high-precision Renyi entropies of D-dimensional harmonic-oscillator states."""

from ._core import (
    bb_bound,
    check_uncertainty,
    conjugate_index,
    energy,
    entropic_moment,
    entropy_sum,
    hermite_coefficients,
    lauricella_f,
    renyi_entropic_power,
    renyi_entropy,
    tsallis_entropy,
)

__all__ = [
    "bb_bound",
    "check_uncertainty",
    "conjugate_index",
    "energy",
    "entropic_moment",
    "entropy_sum",
    "hermite_coefficients",
    "lauricella_f",
    "renyi_entropic_power",
    "renyi_entropy",
    "tsallis_entropy",
]
