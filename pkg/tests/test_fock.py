import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import poisson

from jcrevival import (
    DegenerateState,
    FieldAmplitudes,
    IndexOutOfRange,
    ModeConfig,
    TruncationTooSmall,
    cat,
    coherent,
    joint_weight,
    number,
)


class TestCoherent:
    def test_vacuum(self):
        state = coherent(0.0, 10)
        assert state.coeffs[0] == 1.0
        assert np.all(state.coeffs[1:] == 0.0)
        assert state.tail_bound == 0.0

    def test_poisson_weights(self):
        state = coherent(8.0, 140)
        probs = state.probabilities
        ref = poisson.pmf(np.arange(141), 64.0)
        np.testing.assert_allclose(probs, ref, rtol=1e-10, atol=1e-300)
        assert state.tail_bound < 1e-12
        assert state.tail_bound == pytest.approx(poisson.sf(140, 64.0), rel=1e-6)

    def test_phases(self):
        state = coherent(2j, 40)
        assert abs(state.coeffs[4]) ** 2 == pytest.approx(
            math.exp(-4) * 4.0**4 / math.factorial(4), rel=1e-12
        )
        phase = np.angle(state.coeffs[4])
        assert math.cos(phase - 4 * math.pi / 2) == pytest.approx(1.0, abs=1e-12)

    def test_mean_photon_number(self):
        state = coherent(3.0 - 1.0j, 80)
        assert state.mean_photon_number() == pytest.approx(10.0, rel=1e-10)

    def test_truncation_rejected(self):
        with pytest.raises(TruncationTooSmall):
            coherent(8.0, 70)

    def test_norm_invariant(self):
        for alpha in (0.5, 2.0, 5.0 + 1.0j):
            state = coherent(alpha, 80)
            norm = float(np.sum(state.probabilities))
            assert 1.0 - state.tail_bound - 1e-12 <= norm <= 1.0 + 1e-12


class TestCat:
    def test_even_support(self):
        state = cat(2.0, "even", 40)
        n = np.arange(41)
        assert np.all(state.coeffs[n % 2 == 1] == 0.0)
        assert np.sum(state.probabilities) == pytest.approx(1.0, abs=1e-12)

    def test_odd_support(self):
        state = cat(2.0, "odd", 40)
        n = np.arange(41)
        assert np.all(state.coeffs[n % 2 == 0] == 0.0)
        assert np.sum(state.probabilities) == pytest.approx(1.0, abs=1e-12)

    def test_even_limit_is_vacuum(self):
        state = cat(0.0, "even", 10)
        assert state.coeffs[0] == 1.0
        assert np.all(state.coeffs[1:] == 0.0)

    def test_coefficient_ratio(self):
        state = cat(2.0, "even", 40)
        ratio = state.coeffs[2] / state.coeffs[0]
        assert ratio == pytest.approx(4.0 / math.sqrt(2), rel=1e-12)

    def test_against_normalized_series(self):
        # oracle: C_n ~ alpha^n/sqrt(n!) over even n, normalized explicitly
        alpha, n_max = 1.7, 40
        n = np.arange(0, n_max + 1, 2)
        raw = alpha**n / np.sqrt(np.array([math.factorial(int(v)) for v in n], dtype=float))
        raw /= np.linalg.norm(raw)
        state = cat(alpha, "even", n_max)
        np.testing.assert_allclose(state.coeffs[n].real, raw, rtol=1e-12)

    def test_orthogonality_exact(self):
        even = cat(2.0, "even", 40)
        odd = cat(2.0, "odd", 40)
        assert np.vdot(even.coeffs, odd.coeffs) == 0.0

    def test_degenerate_odd(self):
        with pytest.raises(DegenerateState):
            cat(0.0, "odd", 10)

    def test_truncation_rejected(self):
        with pytest.raises(TruncationTooSmall):
            cat(6.0, "even", 30)

    @given(
        st.floats(min_value=0.1, max_value=4.0),
        st.sampled_from(["even", "odd"]),
    )
    @settings(max_examples=25, deadline=None)
    def test_parity_and_norm(self, amp, parity):
        state = cat(amp * 1j, parity, 80)
        keep = np.arange(81) % 2 == (1 if parity == "odd" else 0)
        assert np.all(state.coeffs[~keep] == 0.0)
        assert np.sum(state.probabilities) == pytest.approx(1.0, abs=1e-10)


class TestNumber:
    def test_vacuum(self):
        state = number(0, 5)
        assert state.coeffs[0] == 1.0

    def test_delta(self):
        state = number(3, 5)
        expected = np.zeros(6)
        expected[3] = 1.0
        np.testing.assert_array_equal(state.coeffs.real, expected)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            number(6, 5)


class TestJointWeight:
    def _modes(self):
        return [
            ModeConfig(k=1, state=coherent(2.0, 39)),
            ModeConfig(k=1, state=coherent(2.0, 39)),
        ]

    def test_all_vacuum(self):
        modes = [ModeConfig(k=1, state=coherent(0.0, 5)) for _ in range(3)]
        assert joint_weight(modes, (0, 0, 0)) == 1.0 + 0.0j

    def test_product_definition(self):
        modes = [
            ModeConfig(k=1, state=coherent(1.0, 30)),
            ModeConfig(k=1, state=coherent(2.0, 30)),
        ]
        expected = modes[0].state.coeffs[1] * modes[1].state.coeffs[0]
        assert joint_weight(modes, (1, 0)) == expected

    def test_grid_normalization(self):
        modes = self._modes()
        total = 0.0
        for n1 in range(40):
            for n2 in range(40):
                total += abs(joint_weight(modes, (n1, n2))) ** 2
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_bad_index(self):
        with pytest.raises(IndexOutOfRange):
            joint_weight(self._modes(), (40, 0))


class TestContainers:
    def test_coeffs_read_only(self):
        state = coherent(1.0, 20)
        with pytest.raises(ValueError):
            state.coeffs[0] = 0.0

    def test_norm_validation(self):
        bad = np.zeros(4, dtype=complex)
        bad[0] = 0.5
        with pytest.raises(ValueError):
            FieldAmplitudes(coeffs=bad, n_max=3, tail_bound=0.0)

    def test_mode_config_validation(self):
        state = coherent(1.0, 20)
        with pytest.raises(ValueError):
            ModeConfig(k=0, state=state)
        with pytest.raises(ValueError):
            ModeConfig(k=25, state=state)
