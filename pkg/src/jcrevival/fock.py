"""Initial field states: truncated Fock-coefficient vectors per mode.

Constructors fail loudly (:class:`TruncationTooSmall`) instead of silently
renormalizing when the requested truncation drops too much probability,
since downstream identities depend on the untouched Poisson weights.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateState, IndexOutOfRange, TruncationTooSmall

__all__ = [
    "DEFAULT_EPS_TAIL",
    "FieldAmplitudes",
    "ModeConfig",
    "cat",
    "coherent",
    "joint_weight",
    "number",
]

#: Default upper bound on the probability allowed beyond the truncation.
DEFAULT_EPS_TAIL = 1e-12


@dataclass(frozen=True)
class FieldAmplitudes:
    """Fock coefficients C_0..C_{n_max} of one mode plus a tail-mass bound.

    The coefficient array is read-only; instances are immutable and can be
    shared freely across threads.
    """

    coeffs: np.ndarray
    n_max: int
    tail_bound: float

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.shape != (self.n_max + 1,):
            raise ValueError("coefficient vector must have length n_max + 1")
        norm = float(np.sum(np.abs(c) ** 2))
        if not (1.0 - self.tail_bound - 1e-12 <= norm <= 1.0 + 1e-12):
            raise ValueError(
                f"norm {norm} inconsistent with tail bound {self.tail_bound}"
            )
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.coeffs) ** 2

    def mean_photon_number(self) -> float:
        return float(np.arange(self.n_max + 1) @ self.probabilities)


@dataclass(frozen=True)
class ModeConfig:
    """One field mode: its transition parameter k and initial state.

    k is the number of photons this mode exchanges per atomic transition.
    The optional frequency is informational only; dynamics depend on it
    solely through the system detuning ratio.
    """

    k: int
    state: FieldAmplitudes
    omega: float | None = field(default=None)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("transition parameter k must be >= 1")
        if self.state.n_max < self.k:
            raise ValueError("truncation n_max must be at least k")


def _poisson_tail(mean: float, n_max: int, parity: int | None = None) -> float:
    """Probability mass of the Poisson(mean) distribution beyond n_max,
    optionally restricted to indices with the given parity (0=even, 1=odd).

    Summed upward term by term; the terms are <= 1 so this is exact to
    rounding, with no cancellation against 1.
    """
    if mean == 0.0:
        return 0.0
    n = n_max + 1
    log_p = n * math.log(mean) - mean - math.lgamma(n + 1)
    p = math.exp(log_p)
    total = 0.0
    while n <= n_max + 200000:
        if parity is None or n % 2 == parity:
            total += p
        if p < 1e-30 and n > mean:
            break
        n += 1
        p *= mean / n
    return total


def coherent(
    alpha: complex, n_max: int, eps_tail: float = DEFAULT_EPS_TAIL
) -> FieldAmplitudes:
    """Coherent state |alpha> truncated at n_max.

    C_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!), assembled in log space.
    Raises :class:`TruncationTooSmall` if the Poisson tail beyond n_max
    is not below eps_tail.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    alpha = complex(alpha)
    mean = abs(alpha) ** 2
    if alpha == 0:
        c = np.zeros(n_max + 1, dtype=np.complex128)
        c[0] = 1.0
        return FieldAmplitudes(c, n_max, 0.0)
    tail = _poisson_tail(mean, n_max)
    if tail >= eps_tail:
        raise TruncationTooSmall(
            f"coherent tail {tail:.3e} beyond n_max={n_max} exceeds {eps_tail:.3e}"
        )
    n = np.arange(n_max + 1)
    log_mag = -0.5 * mean + n * math.log(abs(alpha)) - 0.5 * _lgamma_arr(n)
    phase = n * np.angle(alpha)
    c = np.exp(log_mag) * np.exp(1j * phase)
    return FieldAmplitudes(c, n_max, tail)


def cat(
    alpha: complex,
    parity: str,
    n_max: int,
    eps_tail: float = DEFAULT_EPS_TAIL,
) -> FieldAmplitudes:
    """Even or odd coherent superposition |alpha> +/- |-alpha>, normalized.

    Even parity populates only even photon numbers, odd parity only odd
    ones.  The odd cat is undefined at alpha = 0 (:class:`DegenerateState`).
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    alpha = complex(alpha)
    mean = abs(alpha) ** 2
    want_odd = parity == "odd"
    if alpha == 0:
        if want_odd:
            raise DegenerateState("odd cat state vanishes at alpha = 0")
        c = np.zeros(n_max + 1, dtype=np.complex128)
        c[0] = 1.0
        return FieldAmplitudes(c, n_max, 0.0)

    # scaled normalizer: sum over the parity class of e^-x x^n/n!
    if want_odd:
        scaled_norm = -math.expm1(-2.0 * mean) / 2.0  # e^-x sinh x
        log_norm = mean + math.log1p(-math.exp(-2.0 * mean)) - math.log(2.0)
    else:
        scaled_norm = (1.0 + math.exp(-2.0 * mean)) / 2.0  # e^-x cosh x
        log_norm = mean + math.log1p(math.exp(-2.0 * mean)) - math.log(2.0)
    tail = _poisson_tail(mean, n_max, parity=1 if want_odd else 0) / scaled_norm
    if tail >= eps_tail:
        raise TruncationTooSmall(
            f"cat tail {tail:.3e} beyond n_max={n_max} exceeds {eps_tail:.3e}"
        )
    n = np.arange(n_max + 1)
    keep = (n % 2 == 1) if want_odd else (n % 2 == 0)
    c = np.zeros(n_max + 1, dtype=np.complex128)
    log_mag = n[keep] * math.log(abs(alpha)) - 0.5 * _lgamma_arr(n[keep]) - 0.5 * log_norm
    c[keep] = np.exp(log_mag) * np.exp(1j * n[keep] * np.angle(alpha))
    return FieldAmplitudes(c, n_max, tail)


def number(m: int, n_max: int) -> FieldAmplitudes:
    """Photon-number eigenstate |m> within a truncation of size n_max."""
    if not 0 <= m <= n_max:
        raise IndexOutOfRange(f"number state m={m} outside [0, {n_max}]")
    c = np.zeros(n_max + 1, dtype=np.complex128)
    c[m] = 1.0
    return FieldAmplitudes(c, n_max, 0.0)


def joint_weight(modes: list[ModeConfig] | tuple[ModeConfig, ...], n) -> complex:
    """Product of per-mode coefficients at the multi-index n."""
    n = tuple(int(v) for v in n)
    if len(n) != len(modes):
        raise ValueError("multi-index length must match the number of modes")
    out = 1.0 + 0.0j
    for mode, nj in zip(modes, n):
        if not 0 <= nj <= mode.state.n_max:
            raise IndexOutOfRange(f"index {nj} outside [0, {mode.state.n_max}]")
        out *= complex(mode.state.coeffs[nj])
    return out


def _lgamma_arr(n: np.ndarray) -> np.ndarray:
    return np.array([math.lgamma(v + 1.0) for v in n])
