"""Phase-space-origin observables.

Conventions used throughout:

* Wigner values at the origin are reported as the bare photon-number parity
  expectation (no 2^N/pi^N prefactor), so the vacuum gives exactly 1 and
  the parity-state identity with the atomic inversion holds at unit scale.
* The quadrature marginal carries its Gaussian normalization, i.e. a factor
  pi^(-N/2), so it is a genuine probability-density value at the origin.
* Number-state basis functions follow the same pair of conventions: the
  marginal is psi_n(q)^2 with envelope exp(-q^2), consistent with
  integrating the number-state Wigner function over momentum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .dynamics import SystemConfig, evolve, grid_tables, sweep_raw
from .errors import NotNormalized, QuadratureDiverged, UnsupportedArity
from .specfun import laguerre

__all__ = [
    "RadonQuadrature",
    "homodyne_origin",
    "inverse_radon_origin",
    "marginal_number_state",
    "parity_sum",
    "phase_averaged_position_distribution",
    "position_distribution",
    "q_origin",
    "wigner_number_state",
    "wigner_origin",
    "wigner_origin_initial_product",
]


def wigner_number_state(n: int, q: float, p: float) -> float:
    """Wigner function of the photon-number state |n> at the point (q, p).

    ((-1)^n / pi) exp(-q^2 - p^2) L_n(2 q^2 + 2 p^2); its origin value is
    the parity (-1)^n / pi.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    r2 = q * q + p * p
    return (-1.0) ** n / math.pi * math.exp(-r2) * laguerre(n, 2.0 * r2)


def marginal_number_state(n: int, q):
    """Position density of |n>: psi_n(q)^2 with unit integral.

    Equals H_n(q)^2 exp(-q^2) / (2^n n! sqrt(pi)), evaluated through the
    normalized oscillator recurrence so large n stays finite.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    q_arr = np.atleast_1d(np.asarray(q, dtype=np.float64))
    psi = _backend.hermite_psi_table(n, q_arr)[n]
    out = psi * psi
    return float(out[0]) if np.isscalar(q) or np.ndim(q) == 0 else out


def wigner_origin(config: SystemConfig, T: float) -> float:
    """Photon-number parity expectation of the field at scaled time T.

    Bounded by 1 in magnitude; reduces to the atomic inversion (up to sign)
    for single-parity inputs with odd total transition parameter, and is
    time independent whenever the total transition parameter is even.
    """
    tb = grid_tables(config)
    _, wig, _, _ = sweep_raw(tb, np.array([float(T)]))
    return float(wig[0])


def wigner_origin_initial_product(config: SystemConfig) -> float:
    """Product over modes of the initial per-mode parity expectations."""
    out = 1.0
    for mode in config.modes:
        n = np.arange(mode.state.n_max + 1)
        out *= float(((-1.0) ** n * mode.state.probabilities).sum())
    return out


def homodyne_origin(config: SystemConfig, T: float) -> float:
    """Quadrature-distribution value at the origin at scaled time T.

    Phase-insensitive diagonal sum weighted by the per-mode origin factors
    H_n(0)^2/(2^n n!), scaled by pi^(-N/2); zero for any mode prepared in
    an odd-parity state whose transition parameter is even.
    """
    tb = grid_tables(config)
    _, _, hom, _ = sweep_raw(tb, np.array([float(T)]))
    return float(hom[0]) * math.pi ** (-0.5 * config.n_modes)


def q_origin(config: SystemConfig, T: float) -> float:
    """Husimi function of the field at the phase-space origin (single mode).

    Vacuum population of the reduced field state over pi:
    (1/pi) |C_0|^2 |G1(0, T)|^2.  For coherent input on resonance this is
    exp(-|alpha|^2) cos^2(T sqrt(k!)) / pi, which vanishes for strong
    fields.  (An alternative convention with exp(-2|alpha|^2) appears in
    the literature; the reduced-state form is used here.)
    """
    if config.n_modes != 1:
        raise UnsupportedArity("Q at the origin is defined for a single mode")
    tb = grid_tables(config)
    _, _, _, g1sq0 = sweep_raw(tb, np.array([float(T)]))
    return float(tb.weight[0] * g1sq0[0]) / math.pi


def parity_sum(count_dist) -> float:
    """Alternating sum of a photon-count distribution, sum_n (-1)^n P(n).

    Raises :class:`NotNormalized` if the entries deviate from unit total
    by more than 1e-8.
    """
    p = np.asarray(count_dist, dtype=np.float64)
    if p.ndim != 1 or (p < 0).any():
        raise ValueError("count distribution must be a 1-D nonnegative vector")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-8:
        raise NotNormalized(f"counts sum to {total}, expected 1")
    signs = (-1.0) ** np.arange(p.size)
    return float(signs @ p)


def position_distribution(config: SystemConfig, T: float, zeta):
    """Position density pr(zeta, T) of the single-mode field.

    Coherent sum within each atomic branch (cross terms included):
    |sum_n a_plus(n) psi_n|^2 + |sum_n a_minus(n) psi_(n+k)|^2.
    """
    u, v, k = _branch_vectors(config, T)
    z_arr = np.atleast_1d(np.asarray(zeta, dtype=np.float64))
    psi = _backend.hermite_psi_table(u.size - 1 + k, z_arr)
    amp_up = u @ psi[: u.size]
    amp_dn = v @ psi[k : k + v.size]
    out = np.abs(amp_up) ** 2 + np.abs(amp_dn) ** 2
    return float(out[0]) if np.ndim(zeta) == 0 else out


def phase_averaged_position_distribution(config: SystemConfig, T: float, zeta):
    """Position density after averaging over the field phase (single mode).

    Incoherent mixture sum_n P(n, T) psi_n(zeta)^2 over the photon-count
    distribution: what a homodyne detector sees when the local-oscillator
    phase is unlocked.  Its origin value equals `homodyne_origin`, and its
    back-projection reproduces `wigner_origin` exactly.
    """
    u, v, k = _branch_vectors(config, T)
    z_arr = np.atleast_1d(np.asarray(zeta, dtype=np.float64))
    psi = _backend.hermite_psi_table(u.size - 1 + k, z_arr)
    psi2 = psi * psi
    out = (np.abs(u) ** 2) @ psi2[: u.size] + (np.abs(v) ** 2) @ psi2[k : k + v.size]
    return float(out[0]) if np.ndim(zeta) == 0 else out


@dataclass(frozen=True)
class RadonQuadrature:
    """Grids and regularization for the origin back-projection.

    The frequency integral is damped by exp(-cutoff * eta^2) and the limit
    cutoff -> 0 is taken by Richardson extrapolation over three halvings.
    Defaults suit truncations up to roughly n = 45; raise eta_max (decay
    scale sqrt(8 n + 4)) and zeta_max for higher occupation.
    """

    zeta_max: float = 14.0
    zeta_points: int = 2801
    eta_max: float = 25.0
    eta_points: int = 4001
    cutoff: float = 1e-4

    def __post_init__(self):
        if self.zeta_max <= 0 or self.eta_max <= 0:
            raise ValueError("grid extents must be positive")
        if self.zeta_points < 16 or self.eta_points < 16:
            raise ValueError("grids are too coarse")
        if self.cutoff <= 0:
            raise ValueError("cutoff must be positive")


def inverse_radon_origin(pr_samples, quad: RadonQuadrature | None = None) -> float:
    """Back-project a position density onto the phase-space origin.

    Evaluates (1/4) * integral dzeta deta |eta| pr(zeta) e^(i eta zeta);
    the factor 1/4 (rather than 1/(4 pi)) matches the prefactor-free parity
    convention of `wigner_origin`, making the vacuum reconstruct to 1.

    `pr_samples` is called with an array of zeta values and must return the
    density at those points.  Raises :class:`QuadratureDiverged` when the
    frequency window is too small for the sampled state, the extrapolation
    in the cutoff does not settle, or a nonnegligible imaginary part
    remains (above 1e-6).
    """
    quad = quad or RadonQuadrature()
    z = np.linspace(-quad.zeta_max, quad.zeta_max, quad.zeta_points)
    pr = np.asarray(pr_samples(z), dtype=np.float64)
    if pr.shape != z.shape:
        pr = np.array([float(pr_samples(float(v))) for v in z])
    eta = np.linspace(-quad.eta_max, quad.eta_max, quad.eta_points)
    g = _backend.fourier_of_samples(pr, float(z[0]), float(z[1] - z[0]), eta)

    g_edge = max(abs(g[0]), abs(g[-1]))
    if g_edge > 1e-6 * max(abs(g).max(), 1e-300):
        raise QuadratureDiverged(
            f"characteristic function not decayed at eta_max ({g_edge:.2e})"
        )

    kernel = np.abs(eta)
    vals = []
    for eps in (2.0 * quad.cutoff, quad.cutoff, 0.5 * quad.cutoff):
        damped = kernel * np.exp(-eps * eta * eta) * g
        vals.append(0.25 * np.trapezoid(damped, eta))
    first = 2.0 * vals[1] - vals[0]
    second = 2.0 * vals[2] - vals[1]
    if abs(second - first) > 1e-4:
        raise QuadratureDiverged(
            f"cutoff extrapolation unstable ({abs(second - first):.2e})"
        )
    if abs(second.imag) > 1e-6:
        raise QuadratureDiverged(f"imaginary residue {second.imag:.2e}")
    return float(second.real)


def _branch_vectors(config: SystemConfig, T: float):
    if config.n_modes != 1:
        raise UnsupportedArity("position distributions are single-mode only")
    state = evolve(config, T)
    return state.a_plus.ravel(), state.a_minus.ravel(), config.modes[0].k
