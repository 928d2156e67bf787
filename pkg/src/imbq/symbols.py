"""Scalar symbol functions for the dispersive evolution u_tt - Lap u - Lap u_tt = 0.

Every Fourier mode of the equation oscillates at the bounded rate
f(r) = r/sqrt(1+r^2), r = |xi|.  This module provides f, its derivative,
the time-propagator multipliers sin(t f)/f and cos(t f), the symbol of the
order-zero operator (I - Lap)^{-1}(-Lap), and the two elementary constants
used throughout the inequality chains: the sinc supremum L and a threshold
delta0 below which sinc stays >= 1/2.

All functions accept scalars or numpy arrays and are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "SincConstants",
    "DEFAULT_CONSTANTS",
    "dispersion_f",
    "dispersion_f_prime",
    "dispersion_f_inverse",
    "sine_multiplier",
    "cosine_multiplier",
    "p_symbol",
    "stable_sinc",
    "validate_delta0",
]

# Below this argument sinc(x) switches to its Taylor series: sin(x)/x loses
# no accuracy above it, and at the switch point both branches agree to ~1e-28.
_SINC_SERIES_CUTOFF = 1e-4


def _check_radial(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(r)):
        raise DomainError("radial frequency must be finite")
    if np.any(r < 0):
        raise DomainError("radial frequency must be nonnegative")
    return r


def _check_time(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise DomainError("time must be finite")
    if np.any(t < 0):
        raise DomainError("time must be nonnegative")
    return t


def dispersion_f(r):
    """Oscillation rate f(r) = r/sqrt(1+r^2) of the Fourier mode at radius r.

    Strictly increasing from f(0) = 0 toward the supremum 1; the bounded
    range is what separates this equation from the free wave (f = r).
    """
    r = _check_radial(r)
    out = r / np.sqrt(1.0 + r * r)
    return out if out.ndim else float(out)


def dispersion_f_prime(r):
    """Derivative f'(r) = (1+r^2)^{-3/2}; also the group velocity, <= 1."""
    r = _check_radial(r)
    out = (1.0 + r * r) ** -1.5
    return out if out.ndim else float(out)


def dispersion_f_inverse(s):
    """Inverse of the rate map: radius r with f(r) = s, for s in [0, 1)."""
    s = np.asarray(s, dtype=float)
    if not np.all(np.isfinite(s)) or np.any(s < 0) or np.any(s >= 1):
        raise DomainError("dispersion_f_inverse needs s in [0, 1)")
    out = s / np.sqrt(1.0 - s * s)
    return out if out.ndim else float(out)


def p_symbol(r):
    """Symbol r^2/(1+r^2) of the zero-order operator (I - Lap)^{-1}(-Lap).

    Equals dispersion_f(r)^2 exactly.
    """
    r = _check_radial(r)
    r2 = r * r
    out = r2 / (1.0 + r2)
    return out if out.ndim else float(out)


def stable_sinc(x):
    """sin(x)/x with a series branch near 0 to avoid cancellation.

    |x| < 1e-4 uses 1 - x^2/6 + x^4/120; the truncation error there is
    below 1e-26 relative, so the branch switch is seamless.
    """
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < _SINC_SERIES_CUTOFF
    x2 = x * x
    series = 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    with np.errstate(invalid="ignore", divide="ignore"):
        direct = np.where(small, 1.0, np.sin(x) / np.where(small, 1.0, x))
    out = np.where(small, series, direct)
    return out if out.ndim else float(out)


def sine_multiplier(t, r):
    """Propagator factor sin(t f(r))/f(r), continuously extended to t at r = 0.

    Multiplies the initial-velocity spectrum; computed as t*sinc(t f(r)) so
    the removable singularity at f = 0 costs no accuracy.
    """
    t = _check_time(t)
    r = _check_radial(r)
    out = t * stable_sinc(t * dispersion_f(r))
    return out if out.ndim else float(out)


def cosine_multiplier(t, r):
    """Propagator factor cos(t f(r)); multiplies the initial-amplitude spectrum."""
    t = _check_time(t)
    r = _check_radial(r)
    out = np.cos(t * dispersion_f(r))
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class SincConstants:
    """The two elementary constants used by every inequality chain.

    sup_sinc: supremum of |sin(theta)/theta| over theta != 0.  Attained in
        the limit theta -> 0, so exactly 1.
    delta0: threshold in (0, 1) with sin(theta)/theta >= 1/2 on (0, delta0].
        Any value in (0, 1) qualifies because sinc decreases on (0, pi) and
        sinc(1) ~ 0.8415 > 1/2; the interval is *not* widened past 1 even
        though sinc stays above 1/2 up to ~1.8955, so that expressions like
        sqrt(t^2 - delta0^2) are usable from small t onward.
    """

    sup_sinc: float = 1.0
    delta0: float = 0.99

    def __post_init__(self):
        if not validate_delta0(self.delta0):
            raise DomainError(f"delta0={self.delta0} violates the sinc >= 1/2 threshold contract")


def validate_delta0(delta0: float, samples: int = 4096) -> bool:
    """True iff delta0 lies strictly in (0, 1) and sinc >= 1/2 on (0, delta0].

    The sinc condition is checked on a dense sample including the right
    endpoint (sinc decreases on (0, pi), so the endpoint is the binding one).
    """
    delta0 = float(delta0)
    if not np.isfinite(delta0) or not (0.0 < delta0 < 1.0):
        return False
    theta = np.linspace(delta0 / samples, delta0, samples)
    return bool(np.all(stable_sinc(theta) >= 0.5))


DEFAULT_CONSTANTS = SincConstants()
