import math

import numpy as np
import pytest

from imbq.bounds import (
    BoundCheck,
    ThresholdSet,
    bounded_chain_nd,
    bounded_sweep_nd,
    check_Il_lower,
    lower_chain_1d,
    lower_chain_2d,
    lower_sweep_1d,
    lower_sweep_2d,
    upper_chain_1d,
    upper_chain_2d,
    upper_sweep_1d,
    upper_sweep_2d,
)
from imbq.errors import DomainError
from imbq.presets import get_preset
from imbq.symbols import dispersion_f


class TestThresholds:
    def test_low_radius_example(self):
        ts = ThresholdSet.for_time(100.0, 0.99)
        assert ts.low_radius == pytest.approx(9.9005e-3, rel=1e-4)

    def test_ordering_for_large_t(self):
        for t in (10.0, 1e3, 1e6):
            ts = ThresholdSet.for_time(t, 0.99)
            assert ts.low_radius < ts.mid_radius < ts.log_radius

    def test_undefined_radii(self):
        ts = ThresholdSet.for_time(0.5, 0.99)  # below delta0: low shell undefined
        assert ts.low_radius is None
        with pytest.raises(DomainError):
            ts.require("low_radius")
        assert ThresholdSet.for_time(2.0, 0.99).log_radius is None  # log t < delta0^2

    def test_low_shell_phase_equivalence(self):
        # |xi| <= low_radius exactly when t*f(|xi|) <= delta0
        t, delta0 = 250.0, 0.99
        radius = ThresholdSet.for_time(t, delta0).low_radius
        inside = radius * (1.0 - 1e-9)
        outside = radius * (1.0 + 1e-9)
        assert t * float(dispersion_f(inside)) <= delta0
        assert t * float(dispersion_f(outside)) > delta0

    def test_ball_radius_precomputed(self):
        ts = ThresholdSet.for_time(10.0)
        assert float(dispersion_f(ts.ball_radius)) == pytest.approx(0.5, abs=1e-12)


class TestBoundCheckRecord:
    def test_direction_discipline(self):
        ge = BoundCheck("a", 1.0, "ge", lhs=3.0, rhs=2.0)
        assert ge.margin == 1.0 and ge.passed
        le = BoundCheck("b", 1.0, "le", lhs=3.0, rhs=2.0)
        assert le.margin == -1.0 and not le.passed
        eq = BoundCheck("c", 1.0, "eq", lhs=1.0, rhs=1.0 + 1e-10, tolerance=1e-8)
        assert eq.passed
        assert not BoundCheck("d", 1.0, "eq", lhs=1.0, rhs=1.01, tolerance=1e-8).passed

    def test_bad_direction(self):
        with pytest.raises(DomainError):
            BoundCheck("x", 1.0, "gt", 1.0, 0.0)


class TestLowShellFloor:
    def test_reference_value_at_t_100(self):
        chk = check_Il_lower(100.0, 0.99)
        assert chk.passed
        assert chk.rhs == pytest.approx(49.5024, rel=1e-4)
        assert chk.constants["low_radius"] == pytest.approx(9.9005e-3, rel=1e-4)

    def test_large_t_sandwich(self):
        # sinc^2 between 1/4 and 1 on the low shell pins the per-t ratio
        t, delta0 = 1e4, 0.99
        chk = check_Il_lower(t, delta0)
        mass = chk.constants["low_shell_mass"]
        stretch = t / math.sqrt(t * t - delta0 * delta0)
        assert mass / t >= delta0 / 4.0
        assert mass / t <= 2.0 * delta0 * stretch

    def test_defined_just_above_delta0(self):
        chk = check_Il_lower(1.5, 0.99)
        assert chk.passed  # the sinc floor holds for every t > delta0

    def test_below_delta0_rejected(self):
        with pytest.raises(DomainError):
            check_Il_lower(0.9, 0.99)


class TestChains1D:
    def test_gamma_domain(self, gaussian_1d):
        with pytest.raises(DomainError):
            lower_chain_1d(gaussian_1d, 1e3, gamma=0.5)
        with pytest.raises(DomainError):
            lower_chain_1d(gaussian_1d, 1e3, gamma=0.4)

    def test_dimension_guard(self, gaussian_2d):
        with pytest.raises(DomainError):
            lower_chain_1d(gaussian_2d, 1e3)
        with pytest.raises(DomainError):
            upper_chain_1d(gaussian_2d, 1e3)

    def test_below_t_min_rejected(self, gaussian_1d):
        with pytest.raises(DomainError):
            lower_chain_1d(gaussian_1d, 50.0)

    def test_all_pass_on_gaussian(self, gaussian_1d):
        for chk in lower_chain_1d(gaussian_1d, 1e3) + upper_chain_1d(gaussian_1d, 1e3):
            assert chk.passed, chk

    def test_partition_identity_tight(self, gaussian_1d):
        chk = next(c for c in upper_chain_1d(gaussian_1d, 1e3) if c.name == "partition-identity")
        assert abs(chk.lhs - chk.rhs) <= 1e-8 * abs(chk.rhs)

    def test_zero_mean_chain_vacuous(self):
        dog = get_preset("dog", 1)
        checks = lower_sweep_1d(dog, [1e2, 1e3])
        assert all(c.passed for c in checks)
        floor = next(c for c in checks if c.name == "linear-growth-floor")
        assert floor.constants.get("vacuous") is True

    def test_remainder_decays(self, gaussian_1d):
        per_t = {
            t: next(
                c for c in lower_chain_1d(gaussian_1d, t) if c.name == "remainder-envelope"
            ).lhs
            for t in (1e2, 1e4)
        }
        assert per_t[1e4] <= per_t[1e2]


class TestChains2D:
    def test_trick_constant_gamma_one(self, gaussian_2d):
        chk = next(
            c for c in lower_chain_2d(gaussian_2d, 1e3) if c.name == "trick-tail-constant"
        )
        # closed form at gamma = 1 is exactly 1 (in units of the sphere surface)
        assert chk.constants["closed_form"] == pytest.approx(1.0, rel=1e-12)
        assert chk.lhs == pytest.approx(2.0 * math.pi, rel=1e-8)

    def test_log_floor_at_t_e(self):
        # at t = e the logarithmic floor is exactly 1/e
        from imbq.quadrature import integrate_radial_checked

        t = math.e
        value = integrate_radial_checked(
            lambda r: np.exp(-r * r) * (1.0 + r * r) / r,
            0.0,
            1.0 / t,
            1.0,
            extra_edges=np.geomspace(1.0 / t, 1.0, 48),
        ).value
        assert value >= math.exp(-1.0)

    def test_osc_halfbound_spot_value_t10(self, gaussian_2d):
        checks = lower_chain_2d(gaussian_2d, 10.0, t_min=10.0)
        chk = next(c for c in checks if c.name == "osc-smooth-halfbound")
        closed = 0.5 * (math.exp(-0.01) - math.exp(-1.0))
        assert chk.rhs == pytest.approx(closed, rel=1e-12)
        assert chk.rhs == pytest.approx(0.31108519628886289, rel=1e-10)
        assert chk.rhs <= 0.5
        assert chk.passed

    def test_all_pass_on_gaussian(self, gaussian_2d):
        for chk in lower_chain_2d(gaussian_2d, 1e3) + upper_chain_2d(gaussian_2d, 1e3):
            assert chk.passed, chk

    def test_parts_identity_verified(self, gaussian_2d):
        chk = next(c for c in lower_chain_2d(gaussian_2d, 1e4) if c.name == "parts-identity")
        assert chk.passed
        # residual of the integration-by-parts identity vs its envelope budget
        envelope = abs(chk.constants["boundary"]) + abs(chk.constants["bulk"]) + abs(
            chk.constants["smooth"]
        )
        assert chk.lhs <= 1e-8 * (1.0 + envelope)

    def test_threshold_requirement(self, gaussian_2d):
        with pytest.raises(DomainError):
            upper_chain_2d(gaussian_2d, 2.0, t_min=0.0)  # log t < delta0^2

    def test_gamma_window_wider_in_2d(self, gaussian_2d):
        checks = lower_chain_2d(gaussian_2d, 1e3, gamma=0.3)
        assert all(c.passed for c in checks)


class TestChains3D:
    def test_ball_rate_half(self, gaussian_3d):
        chk = next(c for c in bounded_chain_nd(gaussian_3d, 1e2) if c.name == "ball-rate-half")
        assert chk.passed
        assert chk.lhs == pytest.approx(0.5, abs=1e-12)

    def test_inside_bound_closed_form(self, gaussian_3d):
        chk = next(c for c in bounded_chain_nd(gaussian_3d, 1e3) if c.name == "low-ball-upper")
        ball = 1.0 / math.sqrt(3.0)
        expected = 4.0 * math.pi * gaussian_3d.l1_norm**2 * (ball + 1.0 / (9.0 * math.sqrt(3.0)))
        assert chk.rhs == pytest.approx(expected, rel=1e-12)
        assert chk.passed

    def test_low_dimension_rejected(self, gaussian_3d, gaussian_2d):
        with pytest.raises(DomainError):
            bounded_chain_nd(gaussian_3d, 1.0, n=2)
        with pytest.raises(DomainError):
            bounded_chain_nd(gaussian_2d, 1.0, n=3)

    def test_saturation(self, gaussian_3d):
        checks = bounded_sweep_nd(gaussian_3d, [1e2, 1e3, 1e4])
        assert all(c.passed for c in checks)
        plateau = next(c for c in checks if c.name == "plateau-saturation")
        assert plateau.lhs <= 0.05


class TestSweeps:
    @pytest.mark.parametrize("family", ["gaussian", "bump"])
    def test_short_sweeps_all_green(self, family):
        times = [1e2, 1e3]
        p1 = get_preset(family, 1)
        checks = lower_sweep_1d(p1, times) + upper_sweep_1d(p1, times)
        p2 = get_preset(family, 2)
        checks += lower_sweep_2d(p2, times) + upper_sweep_2d(p2, times)
        failures = [c for c in checks if not c.passed]
        assert not failures, failures

    def test_extreme_time_chains_green(self, gaussian_1d, gaussian_2d):
        # the far end of the default sweep window: oscillation period ~ pi/1e6
        checks = lower_chain_1d(gaussian_1d, 1e6) + upper_chain_1d(gaussian_1d, 1e6)
        checks += lower_chain_2d(gaussian_2d, 1e6) + upper_chain_2d(gaussian_2d, 1e6)
        failures = [c for c in checks if not c.passed]
        assert not failures, failures
