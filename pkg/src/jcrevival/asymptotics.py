"""Strong-intensity closed forms for the single-mode, one-photon resonant case.

All formulas here linearize the Rabi frequency around the mean photon
number (harmonic approximation, mean amplitude n_bar = |alpha| >> 1) and
are meaningful only for N = 1, k = 1, zero detuning.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import GridMismatch
from .series import ObservableSeries
from .specfun import bessel_i, hermite_at_zero_log

__all__ = [
    "AsymptoticParams",
    "hermite_poisson_sum",
    "homodyne_asymptotic",
    "inversion_estimator",
    "p_extrema",
    "sqrt_harmonic",
    "wigner_origin_asymptotic",
]

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class AsymptoticParams:
    """Strong-field scale: n_bar is the coherent amplitude |alpha| (so the
    mean photon number is alpha_sq = n_bar^2)."""

    n_bar: float
    alpha_sq: float | None = None

    def __post_init__(self):
        if self.n_bar <= 0:
            raise ValueError("n_bar must be positive")
        if self.alpha_sq is None:
            object.__setattr__(self, "alpha_sq", self.n_bar**2)
        elif abs(self.alpha_sq - self.n_bar**2) > 1e-12 * max(1.0, self.n_bar**2):
            raise ValueError("alpha_sq inconsistent with n_bar^2")


def sqrt_harmonic(n: int, params: AsymptoticParams) -> float:
    """Linearized sqrt(n + 1) around the mean photon number:
    (n_bar + 1/n_bar + n/n_bar)/2.  Exact at n = n_bar^2 - 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    nb = params.n_bar
    return 0.5 * (nb + 1.0 / nb + n / nb)


def wigner_origin_asymptotic(params: AsymptoticParams, T: float) -> float:
    """Strong-field closed form of the origin parity expectation.

    exp(-2 n_bar cos^2(T / 2 n_bar)) * cos(T (n_bar + 1/n_bar)
    - n_bar sin(T / n_bar)).  The envelope peaks at odd multiples of
    pi*n_bar; peak position (not amplitude) is the feature that survives
    comparison with the exact series, whose envelope scale is set by the
    mean photon number rather than the amplitude.
    """
    nb = params.n_bar
    env = math.exp(-2.0 * nb * math.cos(T / (2.0 * nb)) ** 2)
    return env * math.cos(T * (nb + 1.0 / nb) - nb * math.sin(T / nb))


def homodyne_asymptotic(params: AsymptoticParams, T: float) -> float:
    """Strong-field closed form of the origin quadrature density.

    Bessel resummation of the linearized diagonal sum:
    (1/2) e^(-x) { I0(x) + I1(x) + Re[e^(iT(n_bar + 1/n_bar))
    (I0(x e^(iT/n_bar)) - I1(x e^(iT/n_bar)))] } * pi^(-1/2), x = n_bar^2.
    Periodic in T with period 2 pi n_bar for integer n_bar.
    """
    nb = params.n_bar
    x = params.alpha_sq
    scale = math.exp(-x)
    flat = (bessel_i(0, x) + bessel_i(1, x)).real
    z = x * complex(math.cos(T / nb), math.sin(T / nb))
    osc = (
        complex(math.cos(T * (nb + 1.0 / nb)), math.sin(T * (nb + 1.0 / nb)))
        * (bessel_i(0, z) - bessel_i(1, z))
    ).real
    return 0.5 * scale * (flat + osc) / math.sqrt(math.pi)


def p_extrema(params: AsymptoticParams) -> tuple[float, float]:
    """Origin quadrature density at T = 0 and its strong-field maximum.

    p_zero = e^(-x) I0(x) / sqrt(pi); p_max = e^(-x) (I0(x) + I1(x)) /
    sqrt(pi), the envelope value approached near odd multiples of pi*n_bar.
    """
    x = params.alpha_sq
    if x <= 0:
        raise ValueError("alpha_sq must be positive")
    scale = math.exp(-x) / math.sqrt(math.pi)
    i0 = bessel_i(0, x).real
    i1 = bessel_i(1, x).real
    return scale * i0, scale * (i0 + i1)


def inversion_estimator(
    p_series: ObservableSeries,
    params: AsymptoticParams,
    column: str = "homodyne_origin",
) -> ObservableSeries:
    """Rescale a homodyne-origin series into an atomic-inversion estimate.

    The input grid is read as the shifted time tau = T + pi*n_bar, so the
    output keeps every sample but relabels its axis to T = tau - pi*n_bar
    (shift rounded to the uniform grid step) and maps the values through
    (P(tau) - P(0)) / p_max.  P(0) is the series' own sample at tau = 0
    when the grid covers it (making the estimate vanish there identically),
    else the closed-form value from `p_extrema`.  Raises
    :class:`GridMismatch` for a non-uniform grid or when the shift pushes
    every sample below T = 0.
    """
    t = p_series.t
    if t.size < 2:
        raise GridMismatch("series must contain at least two samples")
    dt = float(t[1] - t[0])
    if dt <= 0 or not np.allclose(np.diff(t), dt, rtol=1e-9, atol=1e-12):
        raise GridMismatch("series grid must be uniform and increasing")
    values = p_series[column]
    shift = round(math.pi * params.n_bar / dt)
    t_out = t - shift * dt
    if t_out[-1] < 0.0:
        raise GridMismatch(
            f"shift of {shift} samples leaves no usable range in the series"
        )
    p_zero, p_max = p_extrema(params)
    j0 = int(np.argmin(np.abs(t)))
    p_ref = float(values[j0]) if abs(t[j0]) <= 0.5 * dt else p_zero
    est = (values - p_ref) / p_max
    return ObservableSeries(t=t_out, columns={"inversion_estimate": est})


def hermite_poisson_sum(variant: str, alpha_sq: float, phase: float = 0.0) -> complex:
    """Poisson-weighted sums over squared origin Hermite values.

    variant 'i0':     sum_n x^n H_n(0)^2 / (2^n (n!)^2)
    variant 'i1':     sum_n x^n H_(n+1)(0)^2 / (2^(n+1) n! (n+1)!)
    variant 'phased': the 'i0' sum with an extra factor e^(i*phase*n)

    These resum to I0(x), I1(x) and I0(x e^(i*phase)) respectively, which
    is what the strong-field homodyne form is built from.  Terms are added
    until below 1e-14 of the running total; when the phased sum cancels
    catastrophically (phase near pi/2 at large x) it is redone in arbitrary
    precision.
    """
    if variant not in ("i0", "i1", "phased"):
        raise ValueError("variant must be 'i0', 'i1' or 'phased'")
    if alpha_sq < 0:
        raise ValueError("alpha_sq must be nonnegative")
    if alpha_sq == 0:
        return 1.0 + 0.0j if variant in ("i0", "phased") else 0.0 + 0.0j

    log_x = math.log(alpha_sq)
    total = 0.0 + 0.0j
    peak = 0.0
    # only one parity contributes per variant: even n for i0/phased, odd for i1
    start, step = (0, 2) if variant != "i1" else (1, 2)
    for n in range(start, 100000, step):
        log_t = n * log_x + _log_term(variant, n)
        if log_t > 700.0:
            raise OverflowError("summand exceeds double range")
        mag = math.exp(log_t)
        term = mag * _phase_factor(variant, phase, n)
        total += term
        if mag > peak:
            peak = mag
        if mag < 1e-14 * max(abs(total), 1e-300) and n > alpha_sq:
            break
    if peak / max(abs(total), 1e-300) > 1e3:
        return _hermite_poisson_sum_mp(variant, alpha_sq, phase, peak)
    return total


def _log_term(variant: str, n: int) -> float:
    if variant == "i1":
        log_h2, _ = hermite_at_zero_log(n + 1)
        return 2.0 * log_h2 - math.lgamma(n + 1) - math.lgamma(n + 2) - (n + 1) * _LN2
    log_h2, _ = hermite_at_zero_log(n)
    return 2.0 * log_h2 - 2.0 * math.lgamma(n + 1) - n * _LN2


def _phase_factor(variant: str, phase: float, n: int) -> complex:
    if variant == "phased" and phase != 0.0:
        return complex(math.cos(phase * n), math.sin(phase * n))
    return 1.0 + 0.0j


def _hermite_poisson_sum_mp(
    variant: str, alpha_sq: float, phase: float, peak: float
) -> complex:
    with mpmath.workdps(int(math.log10(max(peak, 1.0))) + 30):
        x = mpmath.mpf(alpha_sq)
        total = mpmath.mpc(0)
        start, step = (0, 2) if variant != "i1" else (1, 2)
        for n in range(start, 100000, step):
            log_t = n * mpmath.log(x) + _log_term_mp(variant, n)
            term = mpmath.exp(log_t)
            if variant == "phased" and phase != 0.0:
                term *= mpmath.exp(1j * phase * n)
            total += term
            if term != 0 and abs(term) < mpmath.mpf(10) ** (-mpmath.mp.dps) * abs(
                total
            ) and n > alpha_sq:
                break
        return complex(total)


def _log_term_mp(variant: str, n: int):
    if variant == "i1":
        log_h2 = mpmath.loggamma(n + 2) - mpmath.loggamma((n + 1) // 2 + 1)
        return 2 * log_h2 - mpmath.loggamma(n + 1) - mpmath.loggamma(n + 2) - (n + 1) * mpmath.log(2)
    log_h2 = mpmath.loggamma(n + 1) - mpmath.loggamma(n // 2 + 1)
    return 2 * log_h2 - 2 * mpmath.loggamma(n + 1) - n * mpmath.log(2)
