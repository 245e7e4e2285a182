import math

import numpy as np
import pytest

from chronon_lab.entropy import EntropyValue
from chronon_lab.errors import (
    DegenerateSpectrum,
    DimensionMismatch,
    NegativeTime,
    NonpositiveEntropy,
    NonpositiveTemperature,
)
from chronon_lab.speed_limits import (
    ThermalContext,
    antiqubit_process_velocity,
    ml_bound_shifted,
    orthogonalization_time,
    process_velocity,
    state_count,
    time_quantum,
)
from chronon_lab.states import BipartiteState, DensityMatrix, StateVector

from conftest import bell_state, entropy_oracle, random_density_mat, random_hermitian

LN2 = math.log(2.0)
NATURAL = ThermalContext()
HBAR_ONE = ThermalContext.hbar_one()


class TestThermalContext:
    def test_defaults_are_natural(self):
        assert (NATURAL.T, NATURAL.h, NATURAL.k, NATURAL.c) == (1.0, 1.0, 1.0, 1.0)

    def test_hbar_one_sets_planck(self):
        assert HBAR_ONE.h == pytest.approx(2 * math.pi)

    def test_rejects_nonpositive(self):
        with pytest.raises(NonpositiveTemperature):
            ThermalContext(T=0.0)
        with pytest.raises(NonpositiveTemperature):
            ThermalContext(h=-1.0)


class TestTimeQuantum:
    def test_ln2_natural(self):
        dt = time_quantum(EntropyValue(LN2), NATURAL)
        assert dt.dt == pytest.approx(1.0 / (4 * LN2), rel=1e-12)
        assert dt.dt == pytest.approx(0.360674, abs=1e-6)

    def test_si_constants_arithmetic_oracle(self):
        h, k, temp = 6.62607e-34, 1.380649e-23, 300.0
        ctx = ThermalContext(T=temp, h=h, k=k, c=2.99792458e8)
        expected = h / (4.0 * k * temp * LN2)  # direct substitution
        dt = time_quantum(EntropyValue(LN2), ctx)
        assert dt.dt == pytest.approx(expected, rel=1e-12)
        assert dt.dt == pytest.approx(5.77e-14, rel=1e-3)

    def test_zero_entropy_signals_no_flow(self):
        with pytest.raises(NonpositiveEntropy):
            time_quantum(EntropyValue(0.0), NATURAL)

    def test_inverse_of_velocity(self, rng):
        for _ in range(20):
            s = EntropyValue(float(rng.random()) + 0.05)
            ctx = ThermalContext(T=float(rng.random()) + 0.5, h=2.0, k=0.7)
            product = time_quantum(s, ctx).dt * process_velocity(s, ctx)
            assert product == pytest.approx(1.0, rel=1e-12)


class TestMlBoundShifted:
    def test_hbar_one_convention_oracle(self):
        # E_mean = 0.5, E0 = 0 with h = 2 pi gives exactly pi
        dt = ml_bound_shifted(0.5, 0.0, HBAR_ONE)
        assert dt.dt == pytest.approx(math.pi, rel=1e-12)

    def test_degenerate_spectrum(self):
        with pytest.raises(DegenerateSpectrum):
            ml_bound_shifted(1.0, 1.0, NATURAL)

    def test_energy_shift_gauge_invariance(self):
        a = ml_bound_shifted(0.9, 0.1, NATURAL).dt
        b = ml_bound_shifted(0.9 + 5.0, 0.1 + 5.0, NATURAL).dt
        assert a == pytest.approx(b, rel=1e-15)


class TestProcessVelocity:
    def test_zero_entropy_zero_velocity(self):
        assert process_velocity(EntropyValue(0.0), NATURAL) == 0.0

    def test_ln2_natural(self):
        assert process_velocity(EntropyValue(LN2), NATURAL) == pytest.approx(2.772589, abs=1e-6)

    def test_linear_in_temperature(self):
        v1 = process_velocity(EntropyValue(LN2), ThermalContext(T=1.0))
        v2 = process_velocity(EntropyValue(LN2), ThermalContext(T=2.0))
        assert v2 == pytest.approx(2 * v1, rel=1e-12)


class TestStateCount:
    def test_zero_time(self):
        assert state_count(EntropyValue(LN2), 0.0, NATURAL) == 0.0

    def test_unit_time(self):
        assert state_count(EntropyValue(LN2), 1.0, NATURAL) == pytest.approx(2.772589, abs=1e-6)

    def test_linear_in_time(self):
        th1 = state_count(EntropyValue(0.4), 1.3, NATURAL)
        th2 = state_count(EntropyValue(0.4), 2.6, NATURAL)
        assert th2 == pytest.approx(2 * th1, rel=1e-12)

    def test_negative_time_rejected(self):
        with pytest.raises(NegativeTime):
            state_count(EntropyValue(LN2), -0.1, NATURAL)


class TestOrthogonalizationTime:
    def test_two_level_analytic(self):
        # overlap (1 + exp(-it))/2 vanishes first at t = pi; bound attained
        h_op = np.diag([0.0, 1.0]).astype(complex)
        psi0 = StateVector(np.array([1.0, 1.0]) / math.sqrt(2))
        res = orthogonalization_time(h_op, psi0, t_max=8.0)
        assert res.t_orth == pytest.approx(math.pi, rel=1e-6)
        assert res.bound == pytest.approx(math.pi, rel=1e-12)
        # sampled trace follows |cos(t/2)| on the grid
        ts = np.linspace(0.0, 8.0, len(res.overlap_trace))
        analytic = np.abs((1 + np.exp(-1j * ts)) / 2)
        assert np.allclose(res.overlap_trace, analytic, atol=1e-10)

    def test_eigenvector_never_orthogonalizes(self):
        h_op = np.diag([0.0, 1.0]).astype(complex)
        res = orthogonalization_time(h_op, StateVector(np.array([1.0, 0.0])), t_max=50.0)
        assert res.t_orth is None
        assert res.bound == math.inf
        assert np.allclose(res.overlap_trace, 1.0)

    def test_found_times_respect_bound(self, rng):
        # random 4-level Hamiltonians, eigenpair superpositions always orthogonalize
        checked = 0
        for _ in range(100):
            h_op = random_hermitian(4, rng)
            w, v = np.linalg.eigh(h_op)
            i, j = sorted(rng.choice(4, size=2, replace=False))
            if w[j] - w[i] < 0.2:
                continue
            psi = (v[:, i] + v[:, j]) / math.sqrt(2)
            res = orthogonalization_time(h_op, StateVector(psi), t_max=40.0)
            if res.t_orth is None:
                continue
            checked += 1
            assert res.t_orth >= res.bound - 1e-9
            # independent analytic first zero for a two-eigenvector state
            assert res.t_orth == pytest.approx(math.pi / (w[j] - w[i]), rel=1e-6)
        assert checked >= 60

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            orthogonalization_time(
                np.eye(3, dtype=complex), StateVector(np.array([1.0, 0.0])), 1.0
            )


class TestAntiqubitVelocity:
    def test_bell_state_zero(self):
        assert antiqubit_process_velocity(bell_state(), NATURAL) == pytest.approx(0.0, abs=1e-9)

    def test_product_scalar_oracle(self, rng):
        rho_a = np.diag([0.75, 0.25]).astype(complex)
        bi = BipartiteState(
            joint=DensityMatrix(np.kron(rho_a, random_density_mat(2, rng))),
            dim_a=2,
            dim_b=2,
        )
        expected = 4.0 * (entropy_oracle([0.75, 0.25]) - (-math.log(0.75)))
        v = antiqubit_process_velocity(bi, NATURAL)
        assert v == pytest.approx(expected, abs=1e-9)
        assert v == pytest.approx(1.098612, abs=1e-6)

    def test_maximally_mixed_product_zero(self, rng):
        bi = BipartiteState(
            joint=DensityMatrix(np.kron(np.eye(2) / 2, random_density_mat(2, rng))),
            dim_a=2,
            dim_b=2,
        )
        assert antiqubit_process_velocity(bi, NATURAL) == pytest.approx(0.0, abs=1e-9)

    def test_temperature_scaling(self):
        bi = bell_state()
        v1 = antiqubit_process_velocity(bi, ThermalContext(T=2.0))
        assert v1 == pytest.approx(0.0, abs=1e-9)
