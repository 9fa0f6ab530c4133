"""Shared fixtures and oracle helpers."""
import math

import numpy as np
import pytest
from scipy.linalg import expm

from jcrevival import ModeConfig, SystemConfig, coherent


def single_mode(state, k=1, detuning=0.0) -> SystemConfig:
    return SystemConfig(modes=(ModeConfig(k=k, state=state),), detuning_ratio=detuning)


@pytest.fixture
def coherent2():
    """Single coherent mode |alpha| = 2, k = 1, resonant."""
    return single_mode(coherent(2.0, 40))


def dense_generator(n_levels: int, k: int, detuning: float) -> np.ndarray:
    """Interaction generator on the truncated joint space.

    Basis |+, n> for n < n_levels followed by |-, n>; the atom-raising term
    removes k photons.  Matches the scaled Hamiltonian whose exponential
    drives the evolution.
    """
    m = np.zeros((2 * n_levels, 2 * n_levels))
    for n in range(n_levels):
        m[n, n] = detuning
        m[n_levels + n, n_levels + n] = -detuning
    for n in range(n_levels - k):
        r = math.exp(0.5 * (math.lgamma(n + k + 1) - math.lgamma(n + 1)))
        m[n, n_levels + n + k] = r
        m[n_levels + n + k, n] = r
    return m


def expm_evolve(coeffs: np.ndarray, k: int, detuning: float, t: float):
    """Oracle evolution: expm(-i t M) applied to the excited-atom state.

    Returns (upper, lower) amplitude vectors over photon number, the lower
    one covering 0..n_max + k.
    """
    n_max = coeffs.size - 1
    n_levels = n_max + k + 1
    m = dense_generator(n_levels, k, detuning)
    psi0 = np.zeros(2 * n_levels, dtype=complex)
    psi0[: n_max + 1] = coeffs
    psi = expm(-1j * t * m) @ psi0
    return psi[:n_levels], psi[n_levels:]
