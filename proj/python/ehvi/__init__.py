"""Exact expected hypervolume improvement for Gaussian beliefs."""

from ._core import (
    DimensionError,
    Error,
    InvalidFrontError,
    ParameterError,
    ReferenceBoundError,
    UnsupportedDimensionError,
    box_integral,
    dominates,
    ehvi,
    ehvi_monte_carlo,
    generate_front,
    hypervolume,
    nondominated_filter,
    psi,
)

__all__ = [
    "DimensionError",
    "Error",
    "InvalidFrontError",
    "ParameterError",
    "ReferenceBoundError",
    "UnsupportedDimensionError",
    "box_integral",
    "dominates",
    "ehvi",
    "ehvi_monte_carlo",
    "generate_front",
    "hypervolume",
    "nondominated_filter",
    "psi",
]
