import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chronon_lab.entropy import EntropyValue
from chronon_lab.errors import NonpositiveTemperature, SuperluminalBoost
from chronon_lab.gaussian import GaussianPacket
from chronon_lab.relativity import (
    Boost,
    check_bound_invariance,
    gamma,
    transform_entropy,
    transform_temperature,
    transform_time_quantum,
)
from chronon_lab.speed_limits import ThermalContext, TimeQuantum, time_quantum

LN2 = math.log(2.0)
NATURAL = ThermalContext()


class TestGamma:
    def test_rest_frame(self):
        assert gamma(Boost(0.0)) == 1.0

    def test_three_four_five(self):
        assert gamma(Boost(0.6)) == pytest.approx(1.25, rel=1e-15)

    def test_lightspeed_rejected(self):
        with pytest.raises(SuperluminalBoost):
            Boost(1.0)
        with pytest.raises(SuperluminalBoost):
            Boost(2.0, c=1.5)

    @given(st.floats(min_value=-0.99, max_value=0.99))
    @settings(max_examples=100, deadline=None)
    def test_even_and_at_least_one(self, v):
        g = gamma(Boost(v))
        assert g >= 1.0
        assert g == pytest.approx(gamma(Boost(-v)), rel=1e-14)
        assert g * gamma(Boost(-v)) >= 1.0
        if abs(v) > 1e-6:
            assert g * gamma(Boost(-v)) > 1.0


class TestTransforms:
    def test_temperature_identity_at_rest(self):
        assert transform_temperature(3.0, Boost(0.0)) == pytest.approx(3.0)

    def test_temperature_sqrt_convention(self):
        # gamma = 4 with exponent -1/2 halves the temperature
        v = math.sqrt(1.0 - 1.0 / 16.0)
        assert transform_temperature(2.0, Boost(v), exponent=-0.5) == pytest.approx(1.0, rel=1e-12)

    def test_temperature_planck_convention(self):
        v = math.sqrt(1.0 - 1.0 / 4.0)  # gamma = 2
        assert transform_temperature(2.0, Boost(v), exponent=-1.0) == pytest.approx(1.0, rel=1e-12)

    def test_temperature_rejects_nonpositive(self):
        with pytest.raises(NonpositiveTemperature):
            transform_temperature(0.0, Boost(0.5))

    def test_entropy_is_identity(self):
        for s in (LN2, 0.0, -0.3):
            assert transform_entropy(EntropyValue(s)).nats == s

    def test_time_quantum_at_rest(self):
        dt = TimeQuantum(0.25)
        assert transform_time_quantum(dt, Boost(0.0)).dt == pytest.approx(0.25)

    def test_time_quantum_dilation_factor(self):
        dt = TimeQuantum(1.0)
        out = transform_time_quantum(dt, Boost(0.6), temp_exponent=-1.0)
        assert out.dt == pytest.approx(1.25, rel=1e-12)

    def test_time_quantum_substitution_oracle(self):
        # exponent -1/2 at gamma = 4: push T through the quantum formula by hand
        v = math.sqrt(1.0 - 1.0 / 16.0)
        b = Boost(v)
        s = EntropyValue(LN2)
        t_bar = 1.0
        dt_bar = time_quantum(s, ThermalContext(T=t_bar))
        t_here = transform_temperature(t_bar, b, exponent=-0.5)  # T = gamma^-1/2 T_bar
        expected = time_quantum(s, ThermalContext(T=t_here)).dt
        got = transform_time_quantum(dt_bar, b, temp_exponent=-0.5).dt
        assert got == pytest.approx(expected, rel=1e-12)
        assert got == pytest.approx(2.0 * dt_bar.dt, rel=1e-12)

    def test_path_independence(self):
        # transforming the quantum equals recomputing it from transformed T
        for v, exp in ((0.3, -1.0), (0.8, -0.5), (0.95, -2.0)):
            b = Boost(v)
            s = EntropyValue(0.9)
            dt_bar = time_quantum(s, ThermalContext(T=1.7))
            direct = transform_time_quantum(dt_bar, b, temp_exponent=exp).dt
            t_here = transform_temperature(1.7, b, exponent=exp)
            recomputed = time_quantum(s, ThermalContext(T=t_here)).dt
            assert direct == pytest.approx(recomputed, rel=1e-12)


class TestBoundInvariance:
    def test_rest_frame_trivial(self):
        rep = check_bound_invariance(GaussianPacket(1.0), NATURAL, Boost(0.0))
        assert rep.passed
        assert rep.rest_velocity == pytest.approx(rep.boosted_velocity, rel=1e-15)

    @pytest.mark.parametrize("v", [0.6, math.sqrt(3) / 2, math.sqrt(1 - 1e-2)])
    def test_certified_pair_invariant(self, v):
        rep = check_bound_invariance(
            GaussianPacket(1.0), NATURAL, Boost(v),
            length_exponent=-1.0, temp_exponent=-1.0,
        )
        assert rep.rel_diff <= 1e-12
        assert rep.passed
        assert rep.gamma_power == 0.0

    def test_mismatched_pair_reports_gamma_power(self):
        # the text's length convention against the dilation temperature
        # convention leaves a gamma^(1/2) residue
        b = Boost(0.6)
        rep = check_bound_invariance(
            GaussianPacket(1.0), NATURAL, b,
            length_exponent=-0.5, temp_exponent=-1.0,
        )
        assert rep.gamma_power == pytest.approx(0.5)
        assert not rep.passed
        assert rep.boosted_velocity / rep.rest_velocity == pytest.approx(
            rep.gamma ** 0.5, rel=1e-12
        )

    def test_equal_exponent_pairs_always_cancel(self):
        # any pair with equal exponents cancels identically in the ratio
        rep = check_bound_invariance(
            GaussianPacket(2.0), NATURAL, Boost(0.9),
            length_exponent=-0.5, temp_exponent=-0.5,
        )
        assert rep.gamma_power == 0.0
        assert rep.rel_diff <= 1e-12

    def test_rest_velocity_is_classical_bound(self):
        from chronon_lab.gaussian import bound_classical_velocity

        rep = check_bound_invariance(GaussianPacket(1.3), NATURAL, Boost(0.5))
        assert rep.rest_velocity == pytest.approx(
            bound_classical_velocity(GaussianPacket(1.3), NATURAL), rel=1e-9
        )
