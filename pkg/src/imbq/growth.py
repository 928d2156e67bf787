"""Classification of norm time series among the three growth regimes.

The squared solution norm grows linearly in t (1D data with nonzero mean),
linearly in log t (2D), or stays bounded (3D and up).  Fitting the squared
norm against the regressors {t, log t, 1} turns the three regimes into
nested linear models compared by an ordinary least-squares residual
contest.  Because the constant model is nested inside both growth models,
a pure residual ranking could never select it on data with any wiggle; a
parsimony rule therefore promotes the constant model whenever its residual
is within a fixed factor of the best one.

Reported r_squared is the uncentered coefficient of determination
1 - ss_res / sum(y^2), the natural choice when one candidate model is
intercept-only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UsageError
from .presets import DataPreset

__all__ = [
    "NormSeries",
    "GrowthModel",
    "SandwichConstants",
    "MODEL_KINDS",
    "fit_growth",
    "sandwich_constants",
]

MODEL_KINDS = ("linear_in_t", "linear_in_log_t", "constant")

# A simpler nested model wins whenever its residual norm is within this
# factor of the best competitor's: the extra parameter must buy a real
# residual reduction, not just soak up noise.
PARSIMONY_FACTOR = 2.0

DEFAULT_FIT_T_MIN = 100.0


def _regressor(kind: str, times: np.ndarray) -> np.ndarray:
    if kind == "linear_in_t":
        return times
    if kind == "linear_in_log_t":
        return np.log(times)
    if kind == "constant":
        return np.ones_like(times)
    raise DomainError(f"unknown model kind {kind!r}")


@dataclass(frozen=True)
class NormSeries:
    """Squared-norm samples ||w(t,.)||^2 on a strictly increasing time grid."""

    dim: int
    preset_name: str
    times: np.ndarray
    values_sq: np.ndarray
    source: str = "oracle"

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values_sq, dtype=float)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values_sq", values)
        if times.ndim != 1 or times.shape != values.shape:
            raise UsageError("times and values_sq must be 1D arrays of equal length")
        if len(times) < 8:
            raise UsageError("a norm series needs at least 8 samples")
        if not np.all(np.diff(times) > 0):
            raise UsageError("times must be strictly increasing")
        if np.any(values < 0):
            raise UsageError("squared norms cannot be negative")
        if self.source not in ("oracle", "solver"):
            raise UsageError("source must be 'oracle' or 'solver'")

    def window(self, t_min: float) -> "NormSeries":
        keep = self.times >= t_min
        if int(np.count_nonzero(keep)) < 8:
            raise UsageError(f"fewer than 8 samples at t >= {t_min}")
        return NormSeries(self.dim, self.preset_name, self.times[keep], self.values_sq[keep], self.source)


@dataclass(frozen=True)
class GrowthModel:
    """One fitted growth law values_sq ~ coefficient * g(t) + intercept."""

    kind: str
    coefficient: float
    intercept: float
    r_squared: float
    residual_norm: float

    @property
    def parameters(self) -> int:
        return 1 if self.kind == "constant" else 2

    def predict(self, times) -> np.ndarray:
        times = np.asarray(times, dtype=float)
        return self.coefficient * _regressor(self.kind, times) + self.intercept


def _fit_one(kind: str, times: np.ndarray, values: np.ndarray) -> GrowthModel:
    if kind == "constant":
        coefficient = float(np.mean(values))
        intercept = 0.0
        residuals = values - coefficient
    else:
        design = np.column_stack([_regressor(kind, times), np.ones_like(times)])
        (coefficient, intercept), *_ = np.linalg.lstsq(design, values, rcond=None)
        residuals = values - design @ (coefficient, intercept)
    ss_res = float(np.sum(residuals**2))
    ss_ref = float(np.sum(values**2))
    if ss_ref == 0.0:
        r_squared = 1.0 if ss_res == 0.0 else 0.0
    else:
        r_squared = max(0.0, 1.0 - ss_res / ss_ref)
    return GrowthModel(
        kind=kind,
        coefficient=float(coefficient),
        intercept=float(intercept),
        r_squared=r_squared,
        residual_norm=float(np.sqrt(ss_res)),
    )


def fit_growth(series: NormSeries, t_min: float = DEFAULT_FIT_T_MIN) -> list[GrowthModel]:
    """Fit all three growth laws; return them best first.

    Ranking is by residual norm, with the parsimony promotion described in
    the module docstring: the intercept-only model ranks first whenever its
    residual is within PARSIMONY_FACTOR of the smallest.
    """
    windowed = series.window(t_min)
    models = [_fit_one(kind, windowed.times, windowed.values_sq) for kind in MODEL_KINDS]
    models.sort(key=lambda m: m.residual_norm)
    best = models[0].residual_norm
    scale = float(np.sqrt(np.sum(windowed.values_sq**2)))
    threshold = max(PARSIMONY_FACTOR * best, 1e-12 * scale)
    for idx, model in enumerate(models):
        if model.kind == "constant" and idx > 0 and model.residual_norm <= threshold:
            models.insert(0, models.pop(idx))
            break
    return models


@dataclass(frozen=True)
class SandwichConstants:
    """Envelope coefficients bracketing values_sq / g(t) over the window.

    c_low and c_high are the inf and sup of the raw ratio, so
    c_low * g(t) <= values_sq <= c_high * g(t) holds pointwise and the two
    envelope curves sandwich the data.  The growth-theorem constants are
    these envelopes normalized by the data factors: mean^2 for the lower
    bound (0 and flagged vacuous when the mean vanishes) and
    (l1 + l2)^2 for the upper.
    """

    c_low: float
    c_high: float
    lower_theorem_constant: float
    upper_theorem_constant: float
    vacuous_lower: bool = False

    def __iter__(self):
        return iter((self.c_low, self.c_high))


def sandwich_constants(
    series: NormSeries,
    preset: DataPreset,
    model: GrowthModel,
    t_min: float = DEFAULT_FIT_T_MIN,
) -> SandwichConstants:
    """Two-sided envelope constants for the fitted growth law.

    The raw pair (c_low, c_high) always satisfies 0 <= c_low <= c_high; the
    theorem-normalized constants are reported alongside.  Normalizing the
    two sides by their different data factors cannot preserve the ordering
    in general (the factors differ while inf and sup of the ratio agree to
    leading order), which is why the envelope pair is the primary result.
    """
    windowed = series.window(t_min)
    growth = _regressor(model.kind, windowed.times)
    if np.any(growth <= 0):
        raise DomainError("growth regressor must be positive on the fit window")
    ratio = windowed.values_sq / growth
    c_low = float(np.min(ratio))
    c_high = float(np.max(ratio))
    mean = preset.mean
    vacuous = mean == 0.0
    lower = 0.0 if vacuous else c_low / (mean * mean)
    upper = c_high / preset.data_size**2
    return SandwichConstants(
        c_low=c_low,
        c_high=c_high,
        lower_theorem_constant=lower,
        upper_theorem_constant=upper,
        vacuous_lower=vacuous,
    )
