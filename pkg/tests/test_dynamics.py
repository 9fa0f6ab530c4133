import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from jcrevival import (
    FieldAmplitudes,
    ModeConfig,
    SystemConfig,
    UnsupportedArity,
    atomic_inversion,
    branch_amplitudes,
    cat,
    coherent,
    evolve,
    number,
    photon_count_distribution,
    rabi_squared,
)
from conftest import expm_evolve, single_mode


class TestRabiSquared:
    def test_single_mode_values(self):
        cfg = single_mode(coherent(0.0, 5), k=1)
        assert rabi_squared((0,), cfg) == pytest.approx(1.0, rel=1e-15)
        cfg2 = single_mode(coherent(1.0, 20), k=2)
        assert rabi_squared((1,), cfg2) == pytest.approx(6.0, rel=1e-14)

    def test_two_modes_with_detuning(self):
        modes = (
            ModeConfig(k=1, state=coherent(1.0, 20)),
            ModeConfig(k=2, state=coherent(1.0, 20)),
        )
        cfg = SystemConfig(modes=modes, detuning_ratio=0.5)
        # (2+1)!/2! * (3+2)!/3! + 0.25 = 3*20 + 0.25
        assert rabi_squared((2, 3), cfg) == pytest.approx(60.25, rel=1e-13)

    def test_positive(self):
        cfg = single_mode(coherent(1.0, 30), k=3, detuning=2.0)
        for n in range(31):
            assert rabi_squared((n,), cfg) > 0


class TestBranchAmplitudes:
    def test_identity_at_t0(self):
        cfg = single_mode(coherent(1.0, 20), k=1, detuning=0.7)
        g1, g2 = branch_amplitudes((3,), 0.0, cfg)
        assert g1 == 1.0 + 0.0j
        assert g2 == 0.0

    def test_vacuum_half_period(self):
        cfg = single_mode(coherent(0.0, 5), k=1)
        g1, g2 = branch_amplitudes((0,), math.pi / 2, cfg)
        assert abs(g1) == pytest.approx(0.0, abs=1e-15)
        assert g2 == pytest.approx(-1.0, rel=1e-15)

    def test_two_level_block_oracle(self):
        # invariant pair {|+,3>, |-,5>} for k = 2 at detuning ratio 1
        n, k, dr, t = 3, 2, 1.0, 0.7
        r = math.sqrt(math.perm(n + k, k))
        block = np.array([[dr, r], [r, -dr]])
        u = expm(-1j * t * block)
        cfg = single_mode(coherent(1.0, 20), k=k, detuning=dr)
        g1, g2 = branch_amplitudes((n,), t, cfg)
        assert g1 == pytest.approx(u[0, 0], abs=1e-10)
        assert 1j * g2 == pytest.approx(u[1, 0], abs=1e-10)

    @given(
        st.integers(min_value=0, max_value=60),
        st.integers(min_value=1, max_value=3),
        st.floats(min_value=-3.0, max_value=3.0),
        st.floats(min_value=-50.0, max_value=50.0),
    )
    @settings(max_examples=80, deadline=None)
    def test_branch_norm_is_one(self, n, k, dr, t):
        cfg = single_mode(coherent(0.0, 70), k=k, detuning=dr)
        g1, g2 = branch_amplitudes((n,), t, cfg)
        assert abs(g1) ** 2 + g2 * g2 == pytest.approx(1.0, abs=1e-12)


def random_state(n_max, seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=n_max + 1) + 1j * rng.normal(size=n_max + 1)
    c /= np.linalg.norm(c)
    return FieldAmplitudes(coeffs=c, n_max=n_max, tail_bound=0.0)


class TestEvolve:
    def test_initial_state(self):
        cfg = single_mode(coherent(1.5, 30), k=1)
        state = evolve(cfg, 0.0)
        np.testing.assert_array_equal(state.a_plus, cfg.modes[0].state.coeffs)
        assert np.all(state.a_minus == 0.0)

    def test_vacuum_full_transfer(self):
        cfg = single_mode(coherent(0.0, 3), k=1)
        state = evolve(cfg, math.pi / 2)
        assert abs(state.a_plus[0]) == pytest.approx(0.0, abs=1e-15)
        assert abs(state.a_minus[0]) == pytest.approx(1.0, rel=1e-15)

    def test_against_dense_exponential(self):
        cfg = single_mode(coherent(2.0, 40), k=1)
        state = evolve(cfg, 1.3)
        upper, lower = expm_evolve(cfg.modes[0].state.coeffs, 1, 0.0, 1.3)
        dist = math.sqrt(
            np.sum(np.abs(state.a_plus - upper[:41]) ** 2)
            + np.sum(np.abs(state.a_minus - lower[1:42]) ** 2)
        )
        assert dist < 1e-8

    def test_unitarity(self):
        for seed, k, dr in ((0, 1, 0.0), (1, 2, 1.0), (2, 3, -0.5)):
            cfg = single_mode(random_state(25, seed), k=k, detuning=dr)
            for t in (0.3, 2.0, 17.0):
                assert evolve(cfg, t).norm_sq() == pytest.approx(1.0, abs=1e-10)

    def test_two_mode_unitarity(self):
        modes = (
            ModeConfig(k=1, state=coherent(1.2, 25)),
            ModeConfig(k=2, state=cat(1.0, "even", 25)),
        )
        cfg = SystemConfig(modes=modes, detuning_ratio=0.8)
        assert evolve(cfg, 5.0).norm_sq() == pytest.approx(1.0, abs=1e-10)


class TestAtomicInversion:
    def test_starts_excited(self):
        cfg = single_mode(coherent(2.0, 40), k=1)
        assert atomic_inversion(cfg, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_vacuum_rabi(self):
        cfg = single_mode(coherent(0.0, 3), k=1)
        for t in np.linspace(0, 12, 60):
            assert atomic_inversion(cfg, float(t)) == pytest.approx(
                math.cos(2 * t), abs=1e-12
            )

    def test_matches_evolved_populations(self):
        cfg = single_mode(cat(1.5, "odd", 40), k=2, detuning=1.0)
        for t in (0.0, 0.7, 3.0, 11.0):
            state = evolve(cfg, t)
            direct = float(
                np.sum(np.abs(state.a_plus) ** 2) - np.sum(np.abs(state.a_minus) ** 2)
            )
            assert atomic_inversion(cfg, t) == pytest.approx(direct, abs=1e-12)

    def test_even_in_time_on_resonance(self):
        cfg = single_mode(coherent(1.7, 35), k=1)
        for t in np.linspace(0.1, 10, 25):
            assert atomic_inversion(cfg, float(t)) == pytest.approx(
                atomic_inversion(cfg, float(-t)), abs=1e-13
            )

    def test_bounded(self):
        cfg = single_mode(random_state(30, 5), k=2, detuning=0.3)
        for t in np.linspace(0, 30, 40):
            assert abs(atomic_inversion(cfg, float(t))) <= 1.0 + 1e-12


class TestPhotonCounts:
    def test_initial_distribution(self):
        cfg = single_mode(coherent(2.0, 40), k=1)
        dist = photon_count_distribution(cfg, 0.0)
        np.testing.assert_allclose(dist[:41], cfg.modes[0].state.probabilities, atol=1e-300)
        assert dist[41] == 0.0

    def test_vacuum_transfer(self):
        cfg = single_mode(coherent(0.0, 3), k=1)
        dist = photon_count_distribution(cfg, math.pi / 2)
        assert dist[0] == pytest.approx(0.0, abs=1e-15)
        assert dist[1] == pytest.approx(1.0, rel=1e-15)

    def test_against_reduced_oracle(self):
        cfg = single_mode(coherent(2.0, 40), k=1)
        upper, lower = expm_evolve(cfg.modes[0].state.coeffs, 1, 0.0, 2.0)
        ref = np.abs(upper) ** 2 + np.abs(lower) ** 2
        dist = photon_count_distribution(cfg, 2.0)
        np.testing.assert_allclose(dist, ref, atol=1e-8)

    def test_normalization(self):
        cfg = single_mode(cat(1.8, "even", 40), k=2)
        for t in (0.5, 4.0, 9.0):
            assert photon_count_distribution(cfg, t).sum() == pytest.approx(
                1.0, abs=1e-10
            )

    def test_multimode_rejected(self):
        modes = (
            ModeConfig(k=1, state=coherent(1.0, 20)),
            ModeConfig(k=1, state=coherent(1.0, 20)),
        )
        with pytest.raises(UnsupportedArity):
            photon_count_distribution(SystemConfig(modes=modes), 1.0)


class TestConstantsOfMotion:
    """The free and interaction generators commute on the truncated space."""

    @staticmethod
    def _operators(n_maxes, ks, omegas, detuning):
        dims = [n + 1 for n in n_maxes]
        dim_f = int(np.prod(dims))
        eye_f = np.eye(dim_f)
        number_ops = []
        lower_ops = []
        for j, d in enumerate(dims):
            n_op = np.diag(np.arange(d, dtype=float))
            a_op = np.diag(np.sqrt(np.arange(1, d, dtype=float)), k=1)
            before = int(np.prod(dims[:j])) if j else 1
            after = int(np.prod(dims[j + 1 :])) if j + 1 < len(dims) else 1
            lift = lambda op, b=before, a=after: np.kron(
                np.eye(b), np.kron(op, np.eye(a))
            )
            number_ops.append(lift(n_op))
            lower_ops.append(lift(np.linalg.matrix_power(a_op, ks[j])))
        sz = np.diag([1.0, -1.0])
        sp = np.array([[0.0, 1.0], [0.0, 0.0]])  # |+><-|
        prod_low = eye_f
        for op in lower_ops:
            prod_low = prod_low @ op
        eps1 = sum(k * w for k, w in zip(ks, omegas))
        free = np.kron(sz, eye_f) * eps1 + np.kron(
            np.eye(2), sum(w * nop for w, nop in zip(omegas, number_ops))
        )
        inter = detuning * np.kron(sz, eye_f) + (
            np.kron(sp, prod_low) + np.kron(sp.T, prod_low.T)
        )
        return free, inter, dims

    @pytest.mark.parametrize(
        "n_maxes,ks,omegas",
        [((8,), (1,), (1.3,)), ((8,), (2,), (0.7,)), ((6, 5), (2, 1), (1.1, 0.4))],
    )
    def test_commutator_vanishes_inside_truncation(self, n_maxes, ks, omegas):
        free, inter, dims = self._operators(n_maxes, ks, omegas, detuning=0.9)
        comm = free @ inter - inter @ free
        # columns whose raised indices stay on the grid must vanish exactly
        grids = np.meshgrid(*[np.arange(d) for d in dims], indexing="ij")
        interior = np.ones(int(np.prod(dims)), dtype=bool)
        for g, k, n_max in zip(grids, ks, n_maxes):
            interior &= (g.ravel() + k) <= n_max
        interior2 = np.concatenate([interior, interior])
        assert np.max(np.abs(comm[:, interior2])) < 1e-12
