"""Evaluation of named observables over a time grid."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import asymptotics
from .dynamics import SystemConfig, grid_tables, sweep_raw
from .errors import UnsupportedArity
from .series import ObservableSeries

__all__ = ["OBSERVABLE_NAMES", "sweep"]

#: Observable names accepted by run configurations.
OBSERVABLE_NAMES = (
    "inversion",
    "wigner_origin",
    "homodyne_origin",
    "q_origin",
    "photon_counts",
    "estimator",
    "asymptotics",
)


def sweep(
    config: SystemConfig,
    t: np.ndarray,
    observables,
    n_bar: float | None = None,
    threads: int = 1,
) -> ObservableSeries:
    """Evaluate the requested observables on the grid t.

    `n_bar` (the coherent amplitude of the single mode) is required by the
    `estimator` and `asymptotics` entries.  `photon_counts` expands into
    one `count_<n>` column per photon number.  Evaluation may be chunked
    over threads; results are identical regardless of thread count.
    """
    t = np.asarray(t, dtype=np.float64)
    observables = list(observables)
    unknown = [o for o in observables if o not in OBSERVABLE_NAMES]
    if unknown:
        raise ValueError(f"unknown observables: {', '.join(unknown)}")
    if not observables:
        raise ValueError("no observables requested")

    tables = grid_tables(config)
    need_counts = "photon_counts" in observables
    need_shifted = "estimator" in observables
    if ("q_origin" in observables or need_counts) and config.n_modes != 1:
        raise UnsupportedArity("q_origin and photon_counts are single-mode only")
    if (need_shifted or "asymptotics" in observables) and n_bar is None:
        raise ValueError("estimator/asymptotics need the coherent amplitude n_bar")

    t_eval = t
    shift = 0
    if need_shifted:
        dt = float(t[1] - t[0])
        shift = round(math.pi * n_bar / dt)
        t_eval = np.concatenate([t, t[-1] + dt * np.arange(1, shift + 1)])

    inv, wig, hom, g1sq0 = _run_chunks(tables, t_eval, threads)
    n = t.size
    hom_scale = math.pi ** (-0.5 * config.n_modes)

    columns: dict[str, np.ndarray] = {}
    for name in observables:
        if name == "inversion":
            columns[name] = inv[:n]
        elif name == "wigner_origin":
            columns[name] = wig[:n]
        elif name == "homodyne_origin":
            columns[name] = hom[:n] * hom_scale
        elif name == "q_origin":
            columns[name] = tables.weight[0] * g1sq0[:n] / math.pi
        elif name == "photon_counts":
            counts = _count_columns(config, tables, t)
            for idx in range(counts.shape[1]):
                columns[f"count_{idx}"] = counts[:, idx]
        elif name == "estimator":
            params = asymptotics.AsymptoticParams(n_bar)
            p_zero, p_max = asymptotics.p_extrema(params)
            p_all = hom * hom_scale
            p_ref = p_all[0] if abs(t[0]) <= 0.5 * (t[1] - t[0]) else p_zero
            columns["estimator"] = (p_all[shift : shift + n] - p_ref) / p_max
        elif name == "asymptotics":
            params = asymptotics.AsymptoticParams(n_bar)
            columns["wigner_origin_asym"] = np.array(
                [asymptotics.wigner_origin_asymptotic(params, tj) for tj in t]
            )
            columns["homodyne_origin_asym"] = np.array(
                [asymptotics.homodyne_asymptotic(params, tj) for tj in t]
            )
    return ObservableSeries(t=t, columns=columns)


def _run_chunks(tables, t, threads: int):
    if threads <= 1 or t.size < 64:
        return sweep_raw(tables, t)
    bounds = np.linspace(0, t.size, threads + 1).astype(int)
    slices = [slice(lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    with ThreadPoolExecutor(max_workers=len(slices)) as pool:
        parts = list(pool.map(lambda s: sweep_raw(tables, t[s]), slices))
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(4))


def _count_columns(config, tables, t) -> np.ndarray:
    """Photon-count distribution per time, shape (len(t), n_max + k + 1)."""
    k = config.modes[0].k
    n_max = config.modes[0].state.n_max
    out = np.zeros((t.size, n_max + k + 1))
    s2 = np.sin(np.outer(t, tables.sqrt_h)) ** 2
    upper = tables.weight * (1.0 - tables.ratio * s2)
    lower = tables.weight * tables.ratio * s2
    out[:, : n_max + 1] = upper
    out[:, k:] += lower
    return out
