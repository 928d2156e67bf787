"""Simulation and verification toolkit for the linear IMBq-type wave equation.

The equation u_tt - Lap u - Lap u_tt = 0 evolves each Fourier mode at the
bounded rate f(|xi|) = |xi|/sqrt(1+|xi|^2).  The package provides

* exact Fourier-multiplier evolution on periodic grids (:mod:`imbq.solver`),
* grid-free oscillatory quadrature of the solution norm (:mod:`imbq.oracle`),
* machine-checkable realizations of the two-sided growth estimates,
  sqrt(t) in 1D, sqrt(log t) in 2D, bounded in 3D (:mod:`imbq.bounds`),
* growth-regime classification of norm time series (:mod:`imbq.growth`),
* a CLI producing CSV/JSON artifacts (:mod:`imbq.cli`).
"""

from .errors import AccuracyError, DomainError, ResolutionError, UsageError
from .presets import BumpPreset, DataPreset, DifferenceOfGaussians, GaussianPreset, get_preset
from .quadrature import QuadratureConfig, QuadResult
from .symbols import (
    DEFAULT_CONSTANTS,
    SincConstants,
    cosine_multiplier,
    dispersion_f,
    dispersion_f_prime,
    p_symbol,
    sine_multiplier,
    validate_delta0,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "DomainError",
    "ResolutionError",
    "UsageError",
    "DataPreset",
    "GaussianPreset",
    "BumpPreset",
    "DifferenceOfGaussians",
    "get_preset",
    "QuadratureConfig",
    "QuadResult",
    "SincConstants",
    "DEFAULT_CONSTANTS",
    "dispersion_f",
    "dispersion_f_prime",
    "p_symbol",
    "sine_multiplier",
    "cosine_multiplier",
    "validate_delta0",
    "__version__",
]
