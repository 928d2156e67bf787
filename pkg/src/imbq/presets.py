"""Initial-velocity presets with known radial Fourier transforms and moments.

Three families are shipped:

* ``gaussian`` -- exp(-a|x|^2), fully closed-form (transform, all moments);
* ``bump`` -- the compactly supported exp(-1/(1-|x|^2)) on |x| < 1, whose
  radial transform is tabulated once by high-resolution quadrature and
  cached on disk (format documented at :data:`CACHE_FORMAT`);
* ``dog`` -- a difference of two Gaussians scaled to have zero mean, the
  degenerate case excluded from the growth lower bounds.

Transform convention: w1(xi) = integral of exp(-i x.xi) u1(x) dx, so the
transform at frequency zero equals the integral of the data.
"""

from __future__ import annotations

import math
import os
import tempfile
from functools import lru_cache

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import gamma as gamma_fn
from scipy.special import j0

from .errors import DomainError
from .quadrature import SPHERE_SURFACE, integrate_panels

__all__ = [
    "DataPreset",
    "GaussianPreset",
    "BumpPreset",
    "DifferenceOfGaussians",
    "get_preset",
    "cache_dir",
    "CACHE_FORMAT",
]

CACHE_FORMAT = """\
Transform cache format (version 1): plain text, one file per preset table.
Header lines start with '#':
    # imbq transform table v1
    # preset=<name> dim=<n>
    # rho_max=<float> samples=<int> panels=<int> order=<int>
    # error_estimate=<float>
followed by `samples` rows of "<rho> <w1(rho)>" in full precision.  Files
are written atomically (temp file + rename), so concurrent builders can
only race to produce identical content.
"""


def cache_dir() -> str:
    """Directory for tabulated transforms; override with IMBQ_CACHE_DIR."""
    override = os.environ.get("IMBQ_CACHE_DIR")
    if override:
        return override
    return os.path.join(os.path.expanduser("~"), ".cache", "imbq")


def _plain_integral(fn, lo: float, hi: float, panels: int = 128, order: int = 16) -> float:
    edges = np.linspace(lo, hi, panels + 1)
    return integrate_panels(fn, edges, order)


def _power_integral(fn, hi: float, panels: int = 300, order: int = 16) -> float:
    """Integral from 0 of an integrand with a fractional power at the origin.

    Geometric panels keep Gauss-Legendre accurate on r^alpha factors; the
    discarded [0, 1e-14] sliver is far below every tolerance in use.
    """
    edges = np.geomspace(1e-14, hi, panels + 1)
    return integrate_panels(fn, edges, order)


class DataPreset:
    """Radially symmetric initial velocity with its transform and moments.

    Subclasses fill in profile/transform and the moment values; everything
    here is dimension-aware through ``self.dim`` in {1, 2, 3}.
    """

    name: str = "abstract"

    def __init__(self, dim: int):
        if dim not in (1, 2, 3):
            raise DomainError("dimension must be 1, 2 or 3")
        self.dim = dim

    # -- data access -------------------------------------------------------

    def profile(self, r):
        """Physical radial profile u1 at |x| = r."""
        raise NotImplementedError

    def transform(self, rho):
        """Radial Fourier profile w1 at |xi| = rho."""
        raise NotImplementedError

    def transform_remainder(self, rho):
        """w1(rho) - w1(0), evaluated without cancellation where possible.

        The naive difference loses all significance for rho -> 0 (the
        remainder vanishes quadratically); subclasses override with a
        cancellation-free form.
        """
        return self.transform(rho) - self.mean

    # -- moments -----------------------------------------------------------

    @property
    def mean(self) -> float:
        """Integral of the data over space; equals transform(0)."""
        raise NotImplementedError

    @property
    def l1_norm(self) -> float:
        raise NotImplementedError

    @property
    def l2_norm(self) -> float:
        raise NotImplementedError

    def weighted_l1(self, gamma: float) -> float:
        """Integral of (1 + |x|^gamma)|u1|, the growth-rate-controlling norm."""
        raise NotImplementedError

    @property
    def data_size(self) -> float:
        """l2_norm + l1_norm, the factor in the upper growth bounds."""
        return self.l2_norm + self.l1_norm

    # -- numerical support -------------------------------------------------

    def tail_radius(self, eps: float) -> float:
        """Frequency radius beyond which |w1|^2 r^{n+1} stays below eps."""
        raise NotImplementedError

    @property
    def support_radius(self) -> float:
        """Radius containing essentially all of the physical profile."""
        raise NotImplementedError

    def _check_gamma(self, gamma: float) -> float:
        gamma = float(gamma)
        if not (0.0 < gamma <= 1.0):
            raise DomainError("gamma must lie in (0, 1]")
        return gamma

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})"


class GaussianPreset(DataPreset):
    """u1 = exp(-a|x|^2); transform (pi/a)^{n/2} exp(-|xi|^2/(4a))."""

    name = "gaussian"

    def __init__(self, dim: int, a: float = 1.0):
        super().__init__(dim)
        if not (a > 0 and np.isfinite(a)):
            raise DomainError("gaussian width parameter a must be positive")
        self.a = float(a)

    def profile(self, r):
        r = np.asarray(r, dtype=float)
        return np.exp(-self.a * r * r)

    def transform(self, rho):
        rho = np.asarray(rho, dtype=float)
        amp = (math.pi / self.a) ** (self.dim / 2.0)
        return amp * np.exp(-rho * rho / (4.0 * self.a))

    def transform_remainder(self, rho):
        rho = np.asarray(rho, dtype=float)
        amp = (math.pi / self.a) ** (self.dim / 2.0)
        return amp * np.expm1(-rho * rho / (4.0 * self.a))

    @property
    def mean(self) -> float:
        return (math.pi / self.a) ** (self.dim / 2.0)

    @property
    def l1_norm(self) -> float:
        return self.mean  # positive profile

    @property
    def l2_norm(self) -> float:
        return (math.pi / (2.0 * self.a)) ** (self.dim / 4.0)

    def weighted_l1(self, gamma: float) -> float:
        gamma = self._check_gamma(gamma)
        n, a = self.dim, self.a
        # integral of |x|^gamma exp(-a|x|^2) = omega_n * Gamma((gamma+n)/2) / (2 a^{(gamma+n)/2})
        moment = SPHERE_SURFACE[n] * gamma_fn((gamma + n) / 2.0) / (2.0 * a ** ((gamma + n) / 2.0))
        return self.l1_norm + moment

    def tail_radius(self, eps: float) -> float:
        n, a = self.dim, self.a
        log_amp = n * math.log(math.pi / a) if math.pi / a > 1 else 0.0
        budget = abs(math.log(eps)) + log_amp + 30.0
        rho = math.sqrt(2.0 * a * budget)
        budget += (n + 1) * math.log1p(rho)
        return math.sqrt(2.0 * a * budget)

    @property
    def support_radius(self) -> float:
        return 6.0 / math.sqrt(2.0 * self.a)

    def __repr__(self):
        return f"GaussianPreset(dim={self.dim}, a={self.a})"


class DifferenceOfGaussians(DataPreset):
    """exp(-a|x|^2) - (b/a)^{n/2} exp(-b|x|^2): zero mean by construction."""

    name = "dog"

    def __init__(self, dim: int, a: float = 1.0, b: float = 2.0):
        super().__init__(dim)
        if not (0 < a < b):
            raise DomainError("need 0 < a < b")
        self.a = float(a)
        self.b = float(b)
        self._coeff = (b / a) ** (dim / 2.0)

    def profile(self, r):
        r = np.asarray(r, dtype=float)
        rr = r * r
        return np.exp(-self.a * rr) - self._coeff * np.exp(-self.b * rr)

    def transform(self, rho):
        rho = np.asarray(rho, dtype=float)
        amp = (math.pi / self.a) ** (self.dim / 2.0)
        rr = rho * rho
        return amp * (np.exp(-rr / (4.0 * self.a)) - np.exp(-rr / (4.0 * self.b)))

    def transform_remainder(self, rho):
        return self.transform(rho)  # zero mean, the transform is its own remainder

    @property
    def mean(self) -> float:
        return 0.0

    @property
    def l1_norm(self) -> float:
        return self._abs_moment(0.0)

    @property
    def l2_norm(self) -> float:
        n, a, b, c = self.dim, self.a, self.b, self._coeff
        sq = (
            (math.pi / (2 * a)) ** (n / 2.0)
            - 2 * c * (math.pi / (a + b)) ** (n / 2.0)
            + c * c * (math.pi / (2 * b)) ** (n / 2.0)
        )
        return math.sqrt(sq)

    def weighted_l1(self, gamma: float) -> float:
        gamma = self._check_gamma(gamma)
        return self.l1_norm + self._abs_moment(gamma)

    @lru_cache(maxsize=None)
    def _abs_moment(self, gamma: float) -> float:
        n = self.dim
        hi = 4.0 + 6.0 / math.sqrt(2.0 * self.a)

        def fn(r):
            return np.abs(self.profile(r)) * r ** (gamma + n - 1)

        return SPHERE_SURFACE[n] * _power_integral(fn, hi, panels=400)

    def tail_radius(self, eps: float) -> float:
        # slowest spectral decay comes from the wider-frequency component b
        return GaussianPreset(self.dim, a=self.b).tail_radius(eps)

    @property
    def support_radius(self) -> float:
        return 6.0 / math.sqrt(2.0 * self.a)

    def __repr__(self):
        return f"DifferenceOfGaussians(dim={self.dim}, a={self.a}, b={self.b})"


class BumpPreset(DataPreset):
    """The standard compactly supported bump exp(-1/(1-|x|^2)) on |x| < 1.

    Its radial transform has no closed form; it is tabulated on a uniform
    frequency grid by oscillation-resolved Gauss-Legendre quadrature and
    interpolated with a cubic spline.  The table is persisted under
    :func:`cache_dir` in the format described by :data:`CACHE_FORMAT`.
    """

    name = "bump"

    # Delta-rho of 0.02 keeps the cubic-spline interpolation error below
    # ~2e-11 absolute (fourth derivative of the transform is < 0.05).
    _RHO_MAX = 700.0
    _SAMPLES = 35001
    _PANELS = 1024
    _ORDER = 12

    def __init__(self, dim: int):
        super().__init__(dim)
        self._spline = None
        self._table_error = None
        self._nodes = None
        self._weights = None

    def profile(self, r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        inside = np.abs(r) < 1.0
        ri = r[inside]
        out[inside] = np.exp(-1.0 / (1.0 - ri * ri))
        return out

    # -- transform tabulation ---------------------------------------------

    def _cache_path(self) -> str:
        return os.path.join(
            cache_dir(),
            f"bump_dim{self.dim}_rho{self._RHO_MAX:g}_n{self._SAMPLES}"
            f"_p{self._PANELS}_o{self._ORDER}.txt",
        )

    def _kernel(self, rho_col: np.ndarray, r_row: np.ndarray) -> np.ndarray:
        """Radial Fourier kernel: the angular integral of exp(-i x.xi)."""
        arg = rho_col[:, None] * r_row[None, :]
        if self.dim == 1:
            return 2.0 * np.cos(arg)
        if self.dim == 2:
            return 2.0 * math.pi * j0(arg) * r_row[None, :]
        small = np.abs(arg) < 1e-8
        safe = np.where(small, 1.0, arg)
        sinc = np.where(small, 1.0 - arg * arg / 6.0, np.sin(safe) / safe)
        return 4.0 * math.pi * sinc * (r_row * r_row)[None, :]

    def _tabulate(self, rho: np.ndarray, panels: int) -> np.ndarray:
        from numpy.polynomial.legendre import leggauss

        x, w = leggauss(self._ORDER)
        edges = np.linspace(0.0, 1.0, panels + 1)
        mids = 0.5 * (edges[1:] + edges[:-1])
        halves = 0.5 * (edges[1:] - edges[:-1])
        nodes = (mids[:, None] + halves[:, None] * x[None, :]).ravel()
        weights = (halves[:, None] * w[None, :]).ravel()
        gvals = self.profile(nodes) * weights
        vals = np.empty_like(rho)
        chunk = 512
        for start in range(0, len(rho), chunk):
            block = rho[start : start + chunk]
            vals[start : start + chunk] = self._kernel(block, nodes) @ gvals
        return vals

    def _build_table(self) -> tuple[np.ndarray, np.ndarray, float]:
        rho = np.linspace(0.0, self._RHO_MAX, self._SAMPLES)
        vals = self._tabulate(rho, self._PANELS)
        check = self._tabulate(rho[::200], 2 * self._PANELS)
        err = float(np.max(np.abs(check - vals[::200])) / np.max(np.abs(vals)))
        return rho, vals, err

    def _load_or_build(self):
        path = self._cache_path()
        if os.path.exists(path):
            loaded = self._read_cache(path)
            if loaded is not None:
                return loaded
        rho, vals, err = self._build_table()
        self._write_cache(path, rho, vals, err)
        return rho, vals, err

    def _read_cache(self, path: str):
        try:
            with open(path) as fh:
                header = [fh.readline() for _ in range(4)]
                if not header[0].startswith("# imbq transform table v1"):
                    return None
                err = float(header[3].split("=", 1)[1])
                data = np.loadtxt(fh)
            if data.shape != (self._SAMPLES, 2):
                return None
            return data[:, 0], data[:, 1], err
        except (OSError, ValueError, IndexError):
            return None

    def _write_cache(self, path: str, rho: np.ndarray, vals: np.ndarray, err: float):
        os.makedirs(os.path.dirname(path), exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write("# imbq transform table v1\n")
                fh.write(f"# preset={self.name} dim={self.dim}\n")
                fh.write(
                    f"# rho_max={self._RHO_MAX:g} samples={self._SAMPLES}"
                    f" panels={self._PANELS} order={self._ORDER}\n"
                )
                fh.write(f"# error_estimate={err:.3e}\n")
                np.savetxt(fh, np.column_stack([rho, vals]), fmt="%.17e")
            os.replace(tmp, path)  # atomic: concurrent writers race benignly
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)

    def _ensure_spline(self):
        if self._spline is None:
            rho, vals, err = self._load_or_build()
            self._spline = CubicSpline(rho, vals)
            self._table_error = err

    @property
    def table_error(self) -> float:
        self._ensure_spline()
        return self._table_error

    def transform(self, rho):
        self._ensure_spline()
        rho = np.asarray(rho, dtype=float)
        out = np.zeros_like(rho)
        inside = rho <= self._RHO_MAX
        out[inside] = self._spline(rho[inside])
        return out

    def _unit_nodes(self) -> tuple[np.ndarray, np.ndarray]:
        if getattr(self, "_nodes", None) is None:
            from numpy.polynomial.legendre import leggauss

            x, w = leggauss(16)
            edges = np.linspace(0.0, 1.0, 129)
            mids = 0.5 * (edges[1:] + edges[:-1])
            halves = 0.5 * (edges[1:] - edges[:-1])
            self._nodes = (mids[:, None] + halves[:, None] * x[None, :]).ravel()
            self._weights = (halves[:, None] * w[None, :]).ravel()
        return self._nodes, self._weights

    def _kernel_minus_one(self, arg: np.ndarray) -> np.ndarray:
        """Angular kernel minus its zero-frequency value, cancellation-free."""
        if self.dim == 1:
            return -4.0 * np.square(np.sin(0.5 * arg))
        if self.dim == 2:
            small = np.abs(arg) < 0.1
            x2 = arg * arg
            series = -x2 / 4.0 + x2 * x2 / 64.0 - x2 * x2 * x2 / 2304.0
            direct = j0(arg) - 1.0
            return 2.0 * math.pi * np.where(small, series, direct)
        small = np.abs(arg) < 0.1
        x2 = arg * arg
        series = -x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0
        safe = np.where(small, 1.0, arg)
        direct = np.sin(safe) / safe - 1.0
        return 4.0 * math.pi * np.where(small, series, direct)

    def transform_remainder(self, rho):
        rho_arr = np.atleast_1d(np.asarray(rho, dtype=float))
        out = np.empty_like(rho_arr)
        low = rho_arr < 0.5
        if np.any(low):
            nodes, weights = self._unit_nodes()
            kernel = self._kernel_minus_one(rho_arr[low][:, None] * nodes[None, :])
            radial = self.profile(nodes) * nodes ** (self.dim - 1) * weights
            out[low] = kernel @ radial
        if np.any(~low):
            out[~low] = self.transform(rho_arr[~low]) - self.mean
        return out if np.ndim(rho) else float(out[0])

    # -- moments (quadrature against the smooth compact profile) -----------

    @lru_cache(maxsize=None)
    def _radial_moment(self, power: float) -> float:
        def fn(r):
            return self.profile(r) * r**power

        return _power_integral(fn, 1.0, panels=300)

    @property
    def mean(self) -> float:
        n = self.dim
        return SPHERE_SURFACE[n] * self._radial_moment(n - 1.0)

    @property
    def l1_norm(self) -> float:
        return self.mean  # positive profile

    @property
    def l2_norm(self) -> float:
        n = self.dim

        def fn(r):
            return self.profile(r) ** 2 * r ** (n - 1)

        return math.sqrt(SPHERE_SURFACE[n] * _plain_integral(fn, 0.0, 1.0, panels=200))

    def weighted_l1(self, gamma: float) -> float:
        gamma = self._check_gamma(gamma)
        n = self.dim
        return self.l1_norm + SPHERE_SURFACE[n] * self._radial_moment(gamma + n - 1.0)

    def tail_radius(self, eps: float) -> float:
        self._ensure_spline()
        rho = np.linspace(0.0, self._RHO_MAX, self._SAMPLES)
        weight = self._spline(rho) ** 2 * (1.0 + rho) ** (self.dim + 1)
        above = np.nonzero(weight > eps)[0]
        if len(above) == 0:
            return 1.0
        return float(min(rho[above[-1]] + 5.0, self._RHO_MAX))

    @property
    def support_radius(self) -> float:
        return 1.0

    def __repr__(self):
        return f"BumpPreset(dim={self.dim})"


class ZeroPreset(DataPreset):
    """Identically zero data; degenerate case for exercising pipelines."""

    name = "zero"

    def profile(self, r):
        return np.zeros_like(np.asarray(r, dtype=float))

    def transform(self, rho):
        return np.zeros_like(np.asarray(rho, dtype=float))

    def transform_remainder(self, rho):
        return np.zeros_like(np.asarray(rho, dtype=float))

    @property
    def mean(self) -> float:
        return 0.0

    @property
    def l1_norm(self) -> float:
        return 0.0

    @property
    def l2_norm(self) -> float:
        return 0.0

    def weighted_l1(self, gamma: float) -> float:
        self._check_gamma(gamma)
        return 0.0

    def tail_radius(self, eps: float) -> float:
        return 1.0

    @property
    def support_radius(self) -> float:
        return 1.0


_FAMILIES = {
    "gaussian": GaussianPreset,
    "bump": BumpPreset,
    "dog": DifferenceOfGaussians,
    "zero": ZeroPreset,
}


def get_preset(name: str, dim: int, **params) -> DataPreset:
    """Construct a shipped preset by family name ('gaussian', 'bump', 'dog')."""
    try:
        family = _FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown preset family {name!r}; choose from {sorted(_FAMILIES)}")
    return family(dim, **params)
