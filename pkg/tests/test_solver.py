import math

import numpy as np
import pytest

from imbq.errors import DomainError, ResolutionError, UsageError
from imbq.oracle import norm_sq_exact
from imbq.presets import GaussianPreset
from imbq.solver import (
    EnergyBreakdown,
    GridField,
    GridSpec,
    adequate_grid,
    apply_p_operator,
    energy,
    evolve,
    evolve_spectra,
    field_from_preset,
    l2_norm,
    resolvent_solve,
    spectral_norm_sq,
    zero_field,
)


@pytest.fixture(scope="module")
def grid_1d():
    return GridSpec(1, 200.0, 4096)


@pytest.fixture(scope="module")
def gauss_field(grid_1d, gaussian_1d):
    return field_from_preset(grid_1d, gaussian_1d)


def _smooth_noise(spec: GridSpec, seed: int) -> GridField:
    rng = np.random.default_rng(seed)
    white = rng.standard_normal((spec.points,) * spec.dim)
    radius = spec.freq_radius()
    shaped = np.fft.ifftn(np.fft.fftn(white) * np.exp(-(radius**2))).real
    return GridField(spec, np.ascontiguousarray(shaped))


class TestGridSpec:
    def test_spacing_relation(self, grid_1d):
        assert grid_1d.spacing * grid_1d.points == pytest.approx(2 * grid_1d.half_width)

    @pytest.mark.parametrize("bad", [dict(dim=4), dict(points=7), dict(points=4), dict(half_width=-1.0)])
    def test_validation(self, bad):
        kwargs = dict(dim=1, half_width=10.0, points=64)
        kwargs.update(bad)
        with pytest.raises(DomainError):
            GridSpec(**kwargs)

    def test_frequencies_are_multiples_of_pi_over_R(self, grid_1d):
        freqs = grid_1d.axis_freqs()
        step = math.pi / grid_1d.half_width
        assert freqs[1] == pytest.approx(step, rel=1e-12)
        assert np.max(np.abs(freqs)) == pytest.approx(grid_1d.nyquist, rel=1e-12)

    def test_adequate_grid_margin(self, gaussian_1d):
        spec = adequate_grid(gaussian_1d, t_max=100.0)
        assert spec.half_width >= gaussian_1d.support_radius + 100.0 + 10.0


class TestL2Norm:
    def test_zero_field(self, grid_1d):
        assert l2_norm(zero_field(grid_1d)) == 0.0

    def test_constant_field(self):
        spec = GridSpec(2, 3.0, 32)
        fld = GridField(spec, np.full((32, 32), -2.5))
        assert l2_norm(fld) == pytest.approx(2.5 * (2 * 3.0) ** 1.0, rel=1e-14)

    def test_gaussian_value(self, gauss_field):
        assert l2_norm(gauss_field) == pytest.approx((math.pi / 2.0) ** 0.25, rel=1e-10)

    def test_plancherel_consistency(self, gauss_field):
        lhs = spectral_norm_sq(gauss_field)
        rhs = (2.0 * math.pi) * l2_norm(gauss_field) ** 2
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_conjugate_symmetry_of_real_fields(self, gauss_field):
        # real field: hat(-k) = conj(hat(k))
        spectrum = np.fft.fft(gauss_field.values)
        n = len(spectrum)
        scale = np.max(np.abs(spectrum))
        for k in (1, 5, 100, 2000):
            assert abs(spectrum[n - k] - np.conj(spectrum[k])) <= 1e-12 * scale


class TestEvolve:
    def test_identity_at_time_zero(self, grid_1d, gauss_field):
        u, ut = evolve(zero_field(grid_1d), gauss_field, 0.0)
        assert np.max(np.abs(u.values)) <= 1e-14
        assert np.max(np.abs(ut.values - gauss_field.values)) <= 1e-13

    def test_zero_data_stays_zero(self, grid_1d):
        u, ut = evolve(zero_field(grid_1d), zero_field(grid_1d), 17.0)
        assert np.all(u.values == 0.0)
        assert np.all(ut.values == 0.0)

    def test_oracle_agreement_1d(self, grid_1d, gaussian_1d, gauss_field):
        u, _ = evolve(zero_field(grid_1d), gauss_field, 50.0)
        oracle = math.sqrt(norm_sq_exact(gaussian_1d, 50.0) / (2.0 * math.pi))
        assert l2_norm(u) == pytest.approx(oracle, rel=1e-6)

    def test_time_composition(self, grid_1d, gauss_field):
        direct_u, direct_ut = evolve(zero_field(grid_1d), gauss_field, 50.0)
        mid_u, mid_ut = evolve(zero_field(grid_1d), gauss_field, 30.0)
        comp_u, comp_ut = evolve(mid_u, mid_ut, 20.0)
        scale = np.max(np.abs(direct_u.values))
        assert np.max(np.abs(comp_u.values - direct_u.values)) <= 1e-10 * scale
        assert np.max(np.abs(comp_ut.values - direct_ut.values)) <= 1e-10

    def test_outputs_real(self, grid_1d, gauss_field):
        u_hat, ut_hat = evolve_spectra(zero_field(grid_1d), gauss_field, 12.0)
        u = np.fft.ifft(u_hat)
        residue = np.max(np.abs(u.imag)) / np.max(np.abs(u.real))
        assert residue <= 1e-12

    def test_negative_time_rejected(self, grid_1d, gauss_field):
        with pytest.raises(DomainError):
            evolve(zero_field(grid_1d), gauss_field, -1.0)

    def test_mismatched_grids(self, grid_1d, gauss_field):
        other = zero_field(GridSpec(1, 100.0, 1024))
        with pytest.raises(UsageError):
            evolve(other, gauss_field, 1.0)

    def test_aliasing_guard(self):
        # spectrum of exp(-500 x^2) extends far past 0.9 * Nyquist on this grid
        spec = GridSpec(1, 4.0, 64)
        sharp = field_from_preset(spec, GaussianPreset(1, a=500.0))
        with pytest.raises(ResolutionError):
            evolve(zero_field(spec), sharp, 1.0)
        with pytest.warns(UserWarning):
            evolve(zero_field(spec), sharp, 1.0, aliasing="warn")
        evolve(zero_field(spec), sharp, 1.0, aliasing="ignore")


class TestEnergy:
    def test_zero_fields(self, grid_1d):
        bre = energy(zero_field(grid_1d), zero_field(grid_1d))
        assert bre.total == bre.kinetic == bre.grad_kinetic == bre.potential == 0.0

    def test_initial_energy_closed_form(self, grid_1d, gauss_field):
        bre = energy(zero_field(grid_1d), gauss_field)
        assert bre.total == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-10)
        assert bre.kinetic == pytest.approx(0.5 * math.sqrt(math.pi / 2.0), rel=1e-10)
        assert bre.grad_kinetic == pytest.approx(0.5 * math.sqrt(math.pi / 2.0), rel=1e-10)
        assert bre.potential == 0.0

    def test_total_is_sum(self):
        bre = EnergyBreakdown(kinetic=1.0, grad_kinetic=2.0, potential=3.25)
        assert bre.total == 6.25

    def test_conservation_along_sweep(self, grid_1d, gauss_field):
        base = energy(zero_field(grid_1d), gauss_field).total
        for t in (1.0, 10.0, 100.0):
            u, ut = evolve(zero_field(grid_1d), gauss_field, t)
            drift = abs(energy(u, ut).total - base) / base
            assert drift <= 1e-10

    @pytest.mark.parametrize("family", ["gaussian", "bump", "dog"])
    def test_conservation_for_every_preset(self, family):
        from imbq.presets import get_preset

        # the bump's transform decays only subexponentially, so give the
        # aliasing guard comfortable Nyquist headroom
        spec = GridSpec(1, 40.0, 2048)
        u1 = field_from_preset(spec, get_preset(family, 1))
        u0 = zero_field(spec)
        base = energy(u0, u1).total
        for t in np.geomspace(1.0, 1000.0, 7):
            u, ut = evolve(u0, u1, float(t))
            assert abs(energy(u, ut).total - base) / base <= 1e-10


class TestResolvent:
    def test_zero_data(self, grid_1d):
        u, v = resolvent_solve(zero_field(grid_1d), zero_field(grid_1d))
        assert np.all(u.values == 0.0)
        assert np.all(v.values == 0.0)

    def test_constant_data(self):
        spec = GridSpec(1, 10.0, 128)
        c = GridField(spec, np.full(128, 3.5))
        u, v = resolvent_solve(c, zero_field(spec))
        assert u.values == pytest.approx(np.full(128, 3.5), rel=1e-13)
        assert np.max(np.abs(v.values)) <= 1e-13

    def test_residuals_on_smooth_noise(self):
        spec = GridSpec(1, 30.0, 1024)
        fdat = _smooth_noise(spec, 3)
        gdat = _smooth_noise(spec, 4)
        u, v = resolvent_solve(fdat, gdat)
        first = GridField(spec, u.values - v.values - fdat.values)
        pu = apply_p_operator(u)
        second = GridField(spec, pu.values + v.values - gdat.values)
        assert l2_norm(first) <= 1e-10 * max(l2_norm(fdat), 1e-30)
        assert l2_norm(second) <= 1e-10 * max(l2_norm(gdat), 1e-30)

    def test_mismatched_grids(self, grid_1d):
        with pytest.raises(UsageError):
            resolvent_solve(zero_field(grid_1d), zero_field(GridSpec(1, 30.0, 64)))


class TestFieldValidation:
    def test_shape_mismatch(self, grid_1d):
        with pytest.raises(UsageError):
            GridField(grid_1d, np.zeros(17))

    def test_complex_physical_rejected(self, grid_1d):
        with pytest.raises(UsageError):
            GridField(grid_1d, np.zeros(4096, dtype=complex))
