"""Exact codimension bounds for the locus of non-factorial hypersurfaces.

Submodules: ``exactmath`` (binomials, prime-field rank), ``formulas`` (closed-form
counts for fixed strata), ``strata`` (the alpha bounds for singular loci of
codimension three), ``sweeps`` (exhaustive checks), ``oracle`` (rank
verification of condition counts) and ``cli``.
"""
from .exactmath import ALTERNATE_PRIME, DEFAULT_PRIME, FieldMatrix, binomial, field_rank, simplex_point_count
from .formulas import BoundValue, Params, bound_general, tau
from .strata import (
    AlphaBreakdown,
    StratumKey,
    alphas,
    composition_consistency,
    dstar,
    enumerate_codim3_strata,
    is_admissible,
    theorem01_bound,
    theorem31_bound,
)

__version__ = "0.1.0"

__all__ = [
    "ALTERNATE_PRIME", "DEFAULT_PRIME", "FieldMatrix", "binomial", "field_rank", "simplex_point_count",
    "BoundValue", "Params", "bound_general", "tau",
    "AlphaBreakdown", "StratumKey", "alphas", "composition_consistency", "dstar",
    "enumerate_codim3_strata", "is_admissible", "theorem01_bound", "theorem31_bound",
]
