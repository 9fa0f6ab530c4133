"""Exact interaction-picture evolution of the atom-field system.

The atom starts excited.  At scaled time T the joint state splits, for each
Fock multi-index n, into an upper branch on |+, n> and a lower branch on
|-, n + k>; the lower-branch amplitude is stored at base index n so nothing
leaks off the truncated grid.  All quantities depend on frequencies only
through the detuning ratio and on time only through T.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import _backend
from .errors import UnsupportedArity
from .fock import ModeConfig
from .specfun import hermite_sq_ratio, log_rising_factorial

__all__ = [
    "EvolvedState",
    "SystemConfig",
    "atomic_inversion",
    "branch_amplitudes",
    "evolve",
    "photon_count_distribution",
    "rabi_squared",
]


@dataclass(frozen=True)
class SystemConfig:
    """N field modes plus the atom, parameterized by the detuning ratio."""

    modes: tuple[ModeConfig, ...]
    detuning_ratio: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))
        object.__setattr__(self, "detuning_ratio", float(self.detuning_ratio))
        if not self.modes:
            raise ValueError("at least one mode is required")

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(m.state.n_max + 1 for m in self.modes)


@dataclass(frozen=True)
class EvolvedState:
    """Joint amplitudes at scaled time T.

    a_plus[n] multiplies |+, n>; a_minus[n] multiplies |-, n + k> but is
    stored at base index n (same array shape as a_plus).
    """

    a_plus: np.ndarray
    a_minus: np.ndarray
    T: float

    def norm_sq(self) -> float:
        return float(
            np.sum(np.abs(self.a_plus) ** 2) + np.sum(np.abs(self.a_minus) ** 2)
        )


@dataclass(frozen=True)
class GridTables:
    """Precomputed per-grid-point factors, flattened in C order."""

    shape: tuple[int, ...]
    f_flat: np.ndarray       # joint coefficients F(n)
    weight: np.ndarray       # |F(n)|^2
    sqrt_h: np.ndarray       # sqrt(R + dr^2), the generalized Rabi frequency
    ratio: np.ndarray        # R / (R + dr^2), in (0, 1]
    sqrt_rising: np.ndarray  # sqrt(R), R = prod_j (n_j + k_j)!/n_j!
    parity: np.ndarray       # (-1)^(n_1 + ... + n_N)
    herm0: np.ndarray        # prod_j H_{n_j}(0)^2 / (2^{n_j} n_j!)
    hermk: np.ndarray        # same at n_j + k_j
    k_parity: float          # (-1)^(k_1 + ... + k_N)


def grid_tables(config: SystemConfig) -> GridTables:
    """Build the flattened per-grid-point tables used by every observable."""
    modes = config.modes
    dr = config.detuning_ratio

    per_log_r = []
    per_parity = []
    per_h0 = []
    per_hk = []
    for mode in modes:
        n = np.arange(mode.state.n_max + 1)
        lr = np.zeros(n.size)
        for m in range(1, mode.k + 1):
            lr += np.log(n + m)
        per_log_r.append(lr)
        per_parity.append((-1.0) ** n)
        per_h0.append(np.array([hermite_sq_ratio(int(v)) for v in n]))
        per_hk.append(np.array([hermite_sq_ratio(int(v) + mode.k) for v in n]))

    log_r = reduce(np.add.outer, per_log_r).ravel()
    if log_r.max() > 700.0:
        raise OverflowError("rising-factorial product exceeds double range")
    f = reduce(np.multiply.outer, [m.state.coeffs for m in modes]).ravel()
    parity = reduce(np.multiply.outer, per_parity).ravel()
    herm0 = reduce(np.multiply.outer, per_h0).ravel()
    hermk = reduce(np.multiply.outer, per_hk).ravel()

    rising = np.exp(log_r)
    h = rising + dr * dr
    k_parity = -1.0 if sum(m.k for m in modes) % 2 else 1.0
    return GridTables(
        shape=config.shape,
        f_flat=f,
        weight=np.abs(f) ** 2,
        sqrt_h=np.sqrt(h),
        ratio=rising / h,
        sqrt_rising=np.exp(0.5 * log_r),
        parity=parity,
        herm0=herm0,
        hermk=hermk,
        k_parity=k_parity,
    )


def sweep_raw(tables: GridTables, t: np.ndarray):
    """Backend reductions over a time grid; see `_kernels_py.sweep_reductions`."""
    return _backend.sweep_reductions(
        np.asarray(t, dtype=np.float64),
        tables.sqrt_h,
        tables.ratio,
        tables.weight,
        tables.parity,
        tables.herm0,
        tables.hermk,
        tables.k_parity,
    )


def rabi_squared(n, config: SystemConfig) -> float:
    """h(n; k) = prod_j (n_j + k_j)!/n_j! + (detuning ratio)^2."""
    n = _check_index(n, config)
    log_r = math.fsum(
        log_rising_factorial(nj, mode.k) for nj, mode in zip(n, config.modes)
    )
    if log_r > 700.0:
        raise OverflowError("rising-factorial product exceeds double range")
    return math.exp(log_r) + config.detuning_ratio**2


def branch_amplitudes(n, T: float, config: SystemConfig) -> tuple[complex, float]:
    """Upper and lower branch factors (G1, G2) for one multi-index.

    G1 = cos(T sqrt(h)) - i dr sin(T sqrt(h))/sqrt(h) multiplies the
    unchanged Fock state; G2 = -sin(T sqrt(h)) sqrt(R)/sqrt(h) (real,
    nonpositive for T sqrt(h) in (0, pi)) sets the transfer magnitude.
    |G1|^2 + |G2|^2 = 1 identically.
    """
    n = _check_index(n, config)
    dr = config.detuning_ratio
    log_r = math.fsum(
        log_rising_factorial(nj, mode.k) for nj, mode in zip(n, config.modes)
    )
    rising = math.exp(log_r)
    sq = math.sqrt(rising + dr * dr)
    s, c = math.sin(T * sq), math.cos(T * sq)
    g1 = complex(c, -dr * s / sq)
    g2 = -s * math.sqrt(rising) / sq
    return g1, g2


def evolve(config: SystemConfig, T: float) -> EvolvedState:
    """Propagate the initial product state to scaled time T.

    a_plus(n) = F(n) G1(n, T); the lower branch carries the quadrature
    factor -i sin(T sqrt(h)) sqrt(R)/sqrt(h), fixed against a direct
    matrix exponential of the interaction generator.
    """
    tb = grid_tables(config)
    dr = config.detuning_ratio
    s = np.sin(T * tb.sqrt_h)
    c = np.cos(T * tb.sqrt_h)
    g1 = c - 1j * dr * s / tb.sqrt_h
    a_plus = (tb.f_flat * g1).reshape(tb.shape)
    a_minus = (-1j * tb.f_flat * s * tb.sqrt_rising / tb.sqrt_h).reshape(tb.shape)
    return EvolvedState(a_plus=a_plus, a_minus=a_minus, T=float(T))


def atomic_inversion(config: SystemConfig, T: float) -> float:
    """Excited-minus-ground population difference at scaled time T."""
    tb = grid_tables(config)
    inv, _, _, _ = sweep_raw(tb, np.array([float(T)]))
    return float(inv[0])


def photon_count_distribution(config: SystemConfig, T: float) -> np.ndarray:
    """Photon-number distribution of a single mode at scaled time T.

    Entry n combines the upper branch at n with the lower branch raised
    from n - k; the vector has length n_max + k + 1 and sums to one.
    """
    if config.n_modes != 1:
        raise UnsupportedArity("photon counting is defined for a single mode")
    k = config.modes[0].k
    state = evolve(config, T)
    n_max = config.modes[0].state.n_max
    out = np.zeros(n_max + k + 1)
    out[: n_max + 1] = np.abs(state.a_plus) ** 2
    out[k:] += np.abs(state.a_minus) ** 2
    return out


def _check_index(n, config: SystemConfig) -> tuple[int, ...]:
    n = tuple(int(v) for v in np.atleast_1d(n))
    if len(n) != config.n_modes:
        raise ValueError("multi-index length must match the number of modes")
    for nj, mode in zip(n, config.modes):
        if not 0 <= nj <= mode.state.n_max:
            raise ValueError(f"index {nj} outside [0, {mode.state.n_max}]")
    return n
