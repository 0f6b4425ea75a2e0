"""Exact q-series, modular linear differential equations and hypergeometric
constructions of vector-valued modular forms."""

from .exactnum import CycNumber
from .qseries import PuiseuxSeries, eisenstein_level1, eta_power, hauptmodul_suite
from .hypergeom import HypParams, hyp_series
from .mlde import Form, Mlde, frobenius_solve_mlde, monic_mlde
from .vvmf import dim2_minimal, dim3_minimal, minimal_vvmf, supersingular_polynomial
from .eisenstein import CuspLabel, EisLabel, eis2_alpha, eis2_difference

__all__ = [
    "CycNumber", "PuiseuxSeries", "eisenstein_level1", "eta_power", "hauptmodul_suite",
    "HypParams", "hyp_series", "Form", "Mlde", "frobenius_solve_mlde", "monic_mlde",
    "dim2_minimal", "dim3_minimal", "minimal_vvmf", "supersingular_polynomial",
    "CuspLabel", "EisLabel", "eis2_alpha", "eis2_difference",
]
