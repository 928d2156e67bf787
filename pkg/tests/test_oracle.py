import math

import numpy as np
import pytest

from imbq.errors import DomainError
from imbq.oracle import (
    ab_remainder,
    holder_ratio_sup,
    moment_P,
    norm_sq_exact,
    norm_sq_exact_detailed,
    oracle_norm_series,
    shell_norm_sq,
    weighted_l1,
)
from imbq.presets import get_preset
from imbq.quadrature import QuadratureConfig


class TestNormSqExact:
    def test_time_zero(self, gaussian_1d):
        assert norm_sq_exact(gaussian_1d, 0.0) == 0.0

    def test_small_time_limit(self, gaussian_1d):
        # the multiplier is t + O(t^3), so the norm is ~ t^2 * spectral mass
        value = norm_sq_exact(gaussian_1d, 0.01)
        expected = 1e-4 * 2.0 * math.pi * math.sqrt(math.pi / 2.0)
        assert value == pytest.approx(expected, rel=1e-4)

    def test_self_convergence_at_large_time(self, gaussian_1d):
        coarse = norm_sq_exact(gaussian_1d, 1e4, QuadratureConfig(rel_tol=1e-6))
        fine = norm_sq_exact(gaussian_1d, 1e4, QuadratureConfig(rel_tol=1e-10))
        assert coarse == pytest.approx(fine, rel=1e-8)

    def test_error_bound_is_honest(self, gaussian_2d):
        res = norm_sq_exact_detailed(gaussian_2d, 123.0)
        tighter = norm_sq_exact(gaussian_2d, 123.0, QuadratureConfig(rel_tol=1e-11))
        assert abs(res.value - tighter) <= max(res.error_bound, 1e-12 * abs(tighter))

    def test_negative_time_rejected(self, gaussian_1d):
        with pytest.raises(DomainError):
            norm_sq_exact(gaussian_1d, -1.0)

    def test_shell_additivity(self, gaussian_1d):
        t = 250.0
        total = norm_sq_exact(gaussian_1d, t)
        left = shell_norm_sq(gaussian_1d, t, 0.0, 0.3).value
        right = shell_norm_sq(gaussian_1d, t, 0.3, None).value
        assert left + right == pytest.approx(total, rel=1e-9)


class TestMoments:
    def test_moment_examples(self, gaussian_1d, gaussian_2d):
        assert moment_P(gaussian_1d) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
        assert moment_P(gaussian_2d) == pytest.approx(math.pi, rel=1e-12)

    def test_zero_mean_preset(self):
        assert moment_P(get_preset("dog", 1)) == 0.0

    def test_weighted_example(self, gaussian_1d):
        assert weighted_l1(gaussian_1d, 1.0) == pytest.approx(math.sqrt(math.pi) + 1.0, rel=1e-12)

    def test_weighted_dominates_l1(self, bump_1d):
        for gamma in (0.25, 0.5, 1.0):
            assert weighted_l1(bump_1d, gamma) >= bump_1d.l1_norm

    def test_weighted_gamma_domain(self, gaussian_1d):
        with pytest.raises(DomainError):
            weighted_l1(gaussian_1d, 1.2)

    def test_bump_self_consistency_under_refinement(self, bump_1d):
        # the moment machinery uses a fixed panel count well past convergence;
        # doubling it moves gamma-weighted moments by < 1e-8 relative
        from imbq.presets import _power_integral

        coarse = _power_integral(lambda r: bump_1d.profile(r) * r**0.5, 1.0, panels=300)
        fine = _power_integral(lambda r: bump_1d.profile(r) * r**0.5, 1.0, panels=600)
        assert coarse == pytest.approx(fine, rel=1e-8)


class TestRemainder:
    def test_zero_frequency(self, gaussian_1d):
        assert ab_remainder(gaussian_1d, 0.0) == 0j

    def test_even_data_has_no_imaginary_part(self, gaussian_2d):
        values = np.asarray(ab_remainder(gaussian_2d, np.linspace(0.1, 20, 50)))
        assert np.all(values.imag == 0.0)

    def test_identity_with_transform(self, gaussian_1d, bump_1d):
        xi = np.geomspace(1e-2, 50.0, 200)
        for preset in (gaussian_1d, bump_1d):
            lhs = np.asarray(ab_remainder(preset, xi)).real
            rhs = preset.transform(xi) - preset.mean
            scale = max(preset.mean, 1.0)
            assert lhs == pytest.approx(rhs, abs=1e-10 * scale)

    def test_holder_sup_finite_and_small(self, gaussian_1d, bump_1d):
        for preset in (gaussian_1d, bump_1d):
            for gamma in (0.6, 1.0):
                sup = holder_ratio_sup(preset, gamma)
                assert 0.0 < sup < 10.0

    def test_holder_sup_reported_for_gaussian(self, gaussian_1d):
        # frozen regression value for the shipped default preset
        assert holder_ratio_sup(gaussian_1d, 1.0) == pytest.approx(0.2039946, rel=1e-5)


class TestSeries:
    def test_series_shape_and_source(self, gaussian_1d):
        series = oracle_norm_series(gaussian_1d, np.geomspace(1e2, 1e3, 8))
        assert series.source == "oracle"
        assert len(series.times) == 8
        assert np.all(series.values_sq > 0)
