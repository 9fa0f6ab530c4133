"""Pure-NumPy implementations of the hot numerical kernels.

Drop-in fallback for the compiled core (`jcrevival._core`); both expose the
same three functions with identical semantics.  Work is chunked so peak
memory stays bounded for long time grids.
"""
from __future__ import annotations

import numpy as np

_CHUNK = 1 << 21  # elements per temporary block


def sweep_reductions(t, sqrt_h, ratio, weight, parity, herm0, hermk, k_parity):
    """Per-time reductions over the flattened Fock grid.

    For each time t[j], with s2 = sin(t[j]*sqrt_h)**2 the squared branch
    populations are g1 = 1 - ratio*s2 and g2 = ratio*s2.  Returns

        inv[j]   = sum(weight * (g1 - g2))
        wig[j]   = sum(weight * parity * (g1 + k_parity*g2))
        hom[j]   = sum(weight * (g1*herm0 + g2*hermk))
        g1sq0[j] = g1 at grid index 0

    (hom carries no pi^(-N/2) prefactor; callers apply conventions.)
    """
    t = np.ascontiguousarray(t, dtype=np.float64)
    n_t = t.size
    inv = np.empty(n_t)
    wig = np.empty(n_t)
    hom = np.empty(n_t)
    g1sq0 = np.empty(n_t)

    w_par = weight * parity
    w_rp = w_par * ratio * (1.0 - k_parity)
    w_r = weight * ratio
    w_dh = w_r * (hermk - herm0)
    base_inv = weight.sum()
    base_wig = w_par.sum()
    base_hom = (weight * herm0).sum()

    step = max(1, _CHUNK // max(sqrt_h.size, 1))
    for lo in range(0, n_t, step):
        hi = min(lo + step, n_t)
        s2 = np.sin(np.outer(t[lo:hi], sqrt_h))
        np.square(s2, out=s2)
        inv[lo:hi] = base_inv - 2.0 * (s2 @ w_r)
        wig[lo:hi] = base_wig - (s2 @ w_rp)
        hom[lo:hi] = base_hom + (s2 @ w_dh)
        g1sq0[lo:hi] = 1.0 - ratio[0] * s2[:, 0]
    return inv, wig, hom, g1sq0


def hermite_psi_table(n_top, z):
    """Orthonormal oscillator eigenfunctions psi_n(z), n = 0..n_top.

    Ground-state variance 1/2 (psi_0^2 = exp(-z^2)/sqrt(pi)); the normalized
    two-term recurrence keeps every entry in range for any n_top.
    """
    z = np.ascontiguousarray(z, dtype=np.float64)
    out = np.empty((n_top + 1, z.size))
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * z * z)
    if n_top >= 1:
        out[1] = np.sqrt(2.0) * z * out[0]
    for n in range(1, n_top):
        out[n + 1] = np.sqrt(2.0 / (n + 1)) * z * out[n] - np.sqrt(n / (n + 1.0)) * out[n - 1]
    return out


def fourier_of_samples(values, z0, dz, eta):
    """Trapezoid approximation of integral dz values(z) e^(i eta z) on the
    uniform grid z = z0 + dz*arange(len(values)), for every eta."""
    values = np.ascontiguousarray(values, dtype=np.float64)
    eta = np.ascontiguousarray(eta, dtype=np.float64)
    z = z0 + dz * np.arange(values.size)
    w = np.full(values.size, dz)
    w[0] = w[-1] = 0.5 * dz
    vw = values * w
    out = np.empty(eta.size, dtype=np.complex128)
    step = max(1, _CHUNK // max(values.size, 1))
    for lo in range(0, eta.size, step):
        hi = min(lo + step, eta.size)
        phase = np.exp(1j * np.outer(eta[lo:hi], z))
        out[lo:hi] = phase @ vw
    return out
