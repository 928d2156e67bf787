import math
import os

import numpy as np
import pytest

from imbq.errors import DomainError
from imbq.presets import BumpPreset, DifferenceOfGaussians, GaussianPreset, get_preset


class TestGaussianMoments:
    def test_mean_1d(self, gaussian_1d):
        assert gaussian_1d.mean == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_mean_2d(self, gaussian_2d):
        assert gaussian_2d.mean == pytest.approx(math.pi, rel=1e-15)

    def test_l2_1d(self, gaussian_1d):
        assert gaussian_1d.l2_norm == pytest.approx((math.pi / 2.0) ** 0.25, rel=1e-15)

    def test_weighted_l1_example(self, gaussian_1d):
        assert gaussian_1d.weighted_l1(1.0) == pytest.approx(math.sqrt(math.pi) + 1.0, rel=1e-14)

    def test_weighted_l1_against_quadrature(self):
        # independent check: panel quadrature of (1+|x|^g) exp(-a x^2) on a
        # geometric ladder (uniform panels cannot resolve the fractional
        # power at the origin to this accuracy)
        from imbq.presets import _power_integral

        preset = GaussianPreset(1, a=0.7)
        for gamma in (0.6, 1.0):
            direct = 2.0 * _power_integral(
                lambda r: (1.0 + r**gamma) * np.exp(-0.7 * r * r), 12.0, panels=400
            )
            assert preset.weighted_l1(gamma) == pytest.approx(direct, rel=1e-12)

    def test_gamma_domain(self, gaussian_1d):
        for bad in (0.0, 1.5, -0.3):
            with pytest.raises(DomainError):
                gaussian_1d.weighted_l1(bad)


class TestTransforms:
    @pytest.mark.parametrize("dim", [1, 2, 3])
    @pytest.mark.parametrize("family", ["gaussian", "bump", "dog"])
    def test_transform_at_zero_equals_mean(self, dim, family):
        preset = get_preset(family, dim)
        assert float(preset.transform(0.0)) == pytest.approx(preset.mean, abs=1e-10 * max(1.0, abs(preset.mean)))

    @pytest.mark.parametrize("dim", [1, 2, 3])
    @pytest.mark.parametrize("family", ["gaussian", "bump", "dog"])
    def test_moment_ordering(self, dim, family):
        preset = get_preset(family, dim)
        for gamma in (0.3, 0.7, 1.0):
            assert abs(preset.mean) <= preset.l1_norm + 1e-12
            assert preset.l1_norm <= preset.weighted_l1(gamma) + 1e-12

    def test_remainder_matches_naive_difference(self, gaussian_2d):
        rho = np.linspace(0.5, 10.0, 200)
        naive = gaussian_2d.transform(rho) - gaussian_2d.mean
        assert gaussian_2d.transform_remainder(rho) == pytest.approx(naive, rel=1e-12)

    def test_remainder_quadratic_at_origin(self, gaussian_1d):
        rho = np.array([1e-8, 1e-7, 1e-6])
        rem = np.abs(np.asarray(gaussian_1d.transform_remainder(rho)))
        expected = gaussian_1d.mean * rho**2 / 4.0
        assert rem == pytest.approx(expected, rel=1e-6)

    def test_dog_zero_mean(self):
        for dim in (1, 2, 3):
            dog = get_preset("dog", dim)
            assert dog.mean == 0.0
            assert float(dog.transform(0.0)) == 0.0
            assert dog.l1_norm > 0.0

    def test_dog_l2_closed_form_against_quadrature(self):
        from imbq.presets import SPHERE_SURFACE, _plain_integral

        for dim in (1, 2, 3):
            dog = DifferenceOfGaussians(dim)
            direct = SPHERE_SURFACE[dim] * _plain_integral(
                lambda r: dog.profile(r) ** 2 * r ** (dim - 1), 0.0, 12.0, panels=256
            )
            assert dog.l2_norm**2 == pytest.approx(direct, rel=1e-12)


class TestBumpTabulation:
    def test_cache_round_trip(self, tmp_path, monkeypatch):
        monkeypatch.setenv("IMBQ_CACHE_DIR", str(tmp_path))
        first = BumpPreset(1)
        rho = np.linspace(0.0, 30.0, 500)
        values_first = first.transform(rho)
        path = first._cache_path()
        assert os.path.exists(path)
        with open(path) as fh:
            assert fh.readline().startswith("# imbq transform table v1")
        second = BumpPreset(1)
        assert second.transform(rho) == pytest.approx(values_first, rel=0, abs=0)
        assert second.table_error < 1e-10

    def test_remainder_small_rho_branch_consistent(self, bump_1d):
        # both branches around the switch radius agree
        rho = np.array([0.4, 0.4999, 0.5001, 0.6])
        rem = np.asarray(bump_1d.transform_remainder(rho))
        naive = bump_1d.transform(rho) - bump_1d.mean
        assert rem == pytest.approx(naive, rel=1e-8)

    def test_bump_transform_against_fresh_quadrature(self, bump_1d):
        # spot check the spline against a direct cosine-transform quadrature
        from imbq.presets import _plain_integral

        for rho in (0.0, 1.7, 8.3, 25.0):
            direct = 2.0 * _plain_integral(
                lambda r: np.cos(rho * r) * bump_1d.profile(r), 0.0, 1.0, panels=600
            )
            assert float(bump_1d.transform(rho)) == pytest.approx(direct, abs=1e-12)


class TestRegistry:
    def test_unknown_family(self):
        with pytest.raises(DomainError):
            get_preset("triangle", 1)

    def test_bad_dim(self):
        with pytest.raises(DomainError):
            get_preset("gaussian", 4)

    def test_zero_preset(self):
        z = get_preset("zero", 2)
        assert z.mean == z.l1_norm == z.l2_norm == 0.0
        assert np.all(z.profile(np.linspace(0, 3, 7)) == 0.0)
