"""Grid-free evaluation of the exact radial integrals behind the solution norm.

For radially symmetric initial velocity with transform profile w1(r), the
squared frequency-side norm of the evolved solution is

    N(t) = omega_n * integral_0^inf  (sin(t f(r))/f(r))^2 w1(r)^2 r^{n-1} dr,

with f(r) = r/sqrt(1+r^2).  This module evaluates N(t) and its shell
restrictions to certified relative accuracy, independently of any FFT grid,
making it the ground truth the spectral solver is checked against.

Conventions: N(t) integrates the *frequency-side* density |w1|^2 d(xi).
The physical-space squared norm is (2*pi)^{-n} N(t).
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .presets import DataPreset
from .quadrature import (
    DEFAULT_QUADRATURE,
    SPHERE_SURFACE,
    QuadratureConfig,
    QuadResult,
    integrate_radial_checked,
)
from .symbols import sine_multiplier

__all__ = [
    "norm_sq_exact",
    "norm_sq_exact_detailed",
    "shell_norm_sq",
    "moment_P",
    "weighted_l1",
    "ab_remainder",
    "holder_ratio_sup",
    "oracle_norm_series",
]


def _check_time(t: float) -> float:
    t = float(t)
    if not np.isfinite(t) or t < 0:
        raise DomainError("time must be finite and nonnegative")
    return t


def shell_norm_sq(
    preset: DataPreset,
    t: float,
    r_lo: float,
    r_hi: float | None = None,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> QuadResult:
    """Frequency-side squared norm restricted to the shell r_lo <= |xi| <= r_hi.

    r_hi = None integrates to the preset's effective spectral support.  The
    result carries the certified error bound and the panel count used.
    """
    t = _check_time(t)
    if r_hi is None:
        r_hi = preset.tail_radius(cfg.rel_tol * 1e-4)
    if t == 0.0 or r_hi <= r_lo:
        return QuadResult(0.0, 0.0, 0)
    n = preset.dim
    surface = SPHERE_SURFACE[n]

    def integrand(r: np.ndarray) -> np.ndarray:
        amp = sine_multiplier(t, r) * preset.transform(r)
        return amp * amp * r ** (n - 1)

    res = integrate_radial_checked(integrand, t, r_lo, r_hi, cfg)
    return QuadResult(surface * res.value, surface * res.error_bound, res.panel_count)


def norm_sq_exact_detailed(
    preset: DataPreset, t: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE
) -> QuadResult:
    """norm_sq_exact plus its error bound and panel count."""
    return shell_norm_sq(preset, t, 0.0, None, cfg)


def norm_sq_exact(preset: DataPreset, t: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """The exact squared frequency-side norm of the solution at time t."""
    return norm_sq_exact_detailed(preset, t, cfg).value


def moment_P(preset: DataPreset) -> float:
    """Integral of the initial velocity over space (the transform at zero)."""
    return preset.mean


def weighted_l1(preset: DataPreset, gamma: float) -> float:
    """The weighted norm integral of (1+|x|^gamma)|u1|; gamma in (0, 1]."""
    return preset.weighted_l1(gamma)


def ab_remainder(preset: DataPreset, xi) -> complex | np.ndarray:
    """Transform remainder w1(xi) - P, i.e. the non-constant part of the data.

    Splitting the transform at frequency zero gives w1 = P + remainder with
    remainder(0) = 0; its real part collects the (cos(x.xi)-1)-moment and its
    imaginary part the sine moment (identically zero for the shipped even
    presets).
    """
    radius = np.abs(np.asarray(xi, dtype=float))
    out = np.asarray(preset.transform_remainder(radius), dtype=complex)
    return out if out.ndim else complex(out)


def holder_ratio_sup(
    preset: DataPreset,
    gamma: float,
    lo: float = 1e-3,
    hi: float = 1e2,
    samples: int = 4096,
) -> float:
    """Sampled supremum of |w1(xi) - P| / (|xi|^gamma * weighted_l1).

    The ratio is bounded for data in the weighted-L1 class; no universal
    value of the bound is available, so this empirical supremum is the
    constant the verification chains use.
    """
    gamma = float(gamma)
    if not (0.0 < gamma <= 1.0):
        raise DomainError("gamma must lie in (0, 1]")
    weighted = preset.weighted_l1(gamma)
    if weighted == 0.0:
        return 0.0  # zero data: remainder vanishes identically
    radius = np.geomspace(lo, hi, samples)
    remainder = np.abs(np.asarray(ab_remainder(preset, radius)))
    ratio = remainder / (radius**gamma * weighted)
    return float(np.max(ratio))


def oracle_norm_series(preset: DataPreset, times, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Norm time series from the quadrature oracle, ready for growth fitting."""
    from .growth import NormSeries

    times = np.asarray(sorted(float(t) for t in times))
    values = np.asarray([norm_sq_exact(preset, t, cfg) for t in times])
    return NormSeries(
        dim=preset.dim,
        preset_name=preset.name,
        times=times,
        values_sq=values,
        source="oracle",
    )
