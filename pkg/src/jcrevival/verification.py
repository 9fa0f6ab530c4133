"""Named invariant suites runnable from the CLI.

Each suite evaluates a handful of identities at pinned desk-scale
parameters and reports the largest observed deviation against a fixed
tolerance.  Failures are reported, never raised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import asymptotics, quasiprob
from .dynamics import SystemConfig, grid_tables, photon_count_distribution, sweep_raw
from .fock import ModeConfig, cat, coherent
from .specfun import bessel_i

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def _single(alpha: float, k: int, parity: str | None, dr: float, n_max: int = 40):
    state = cat(alpha, parity, n_max) if parity else coherent(alpha, n_max)
    return SystemConfig(modes=(ModeConfig(k=k, state=state),), detuning_ratio=dr)


def parity_suite() -> list[CheckResult]:
    """Origin parity expectation vs atomic inversion for cat inputs, k = 1."""
    t = np.linspace(0.0, 25.0, 1000)
    out = []
    for parity, sign, dr in (
        ("even", +1.0, 0.0),
        ("odd", -1.0, 0.0),
        ("even", +1.0, 1.0),
        ("odd", -1.0, 1.0),
    ):
        tables = grid_tables(_single(2.0, 1, parity, dr))
        inv, wig, _, _ = sweep_raw(tables, t)
        dev = float(np.max(np.abs(wig - sign * inv)))
        out.append(
            CheckResult(f"{parity} cat, detuning {dr:g}: W(0,T) = {sign:+.0f}<sz>", dev, 1e-10)
        )
    return out


def localization_suite() -> list[CheckResult]:
    """Even total transition parameter pins W(0,T) at its initial product."""
    t = np.linspace(0.0, 20.0, 601)
    modes = (
        ModeConfig(k=1, state=coherent(1.5, 30)),
        ModeConfig(k=1, state=coherent(2.0, 30)),
    )
    config = SystemConfig(modes=modes)
    tables = grid_tables(config)
    _, wig, _, _ = sweep_raw(tables, t)
    spread = float(wig.max() - wig.min())
    target = math.exp(-2.0 * (1.5**2 + 2.0**2))
    value_err = float(abs(wig[0] - target))
    product_err = float(abs(quasiprob.wigner_origin_initial_product(config) - wig[0]))
    return [
        CheckResult("two-mode k=(1,1): W(0,T) spread over grid", spread, 1e-10),
        CheckResult("two-mode k=(1,1): W(0,0) vs product closed form", value_err, 1e-10),
        CheckResult("two-mode k=(1,1): W(0,0) vs per-mode product", product_err, 1e-12),
    ]


def counting_suite() -> list[CheckResult]:
    """Alternating count sums reproduce the origin parity expectation."""
    t = np.linspace(0.0, 20.0, 200)
    out = []
    for k in (1, 2):
        config = _single(2.0, k, None, 0.0)
        tables = grid_tables(config)
        _, wig, _, _ = sweep_raw(tables, t)
        dev = 0.0
        for tj, wj in zip(t, wig):
            dist = photon_count_distribution(config, float(tj))
            dev = max(dev, abs(quasiprob.parity_sum(dist) - wj))
        out.append(CheckResult(f"coherent k={k}: parity of counts vs W(0,T)", dev, 1e-10))
    return out


def radon_suite() -> list[CheckResult]:
    """Back-projection of quadrature densities onto the origin."""
    out = []
    for n, target in ((0, 1.0), (1, -1.0)):
        rec = quasiprob.inverse_radon_origin(
            lambda z, n=n: quasiprob.marginal_number_state(n, z)
        )
        out.append(CheckResult(f"number state |{n}>", abs(rec - target), 2e-3))
    config = _single(2.0, 1, None, 0.0)
    for T in (2.0, 5.0, 9.0):
        rec = quasiprob.inverse_radon_origin(
            lambda z, T=T: quasiprob.phase_averaged_position_distribution(config, T, z)
        )
        target = quasiprob.wigner_origin(config, T)
        out.append(CheckResult(f"evolved coherent state, T={T:g}", abs(rec - target), 5e-3))
    return out


def appendix_suite() -> list[CheckResult]:
    """Hermite-Poisson sums against the independent Bessel power series."""
    out = []
    for x in (1.0, 4.0, 16.0, 64.0):
        ref0 = bessel_i(0, x).real
        dev0 = abs(asymptotics.hermite_poisson_sum("i0", x) - ref0) / abs(ref0)
        out.append(CheckResult(f"order-0 resummation, x={x:g}", float(dev0), 1e-9))
        ref1 = bessel_i(1, x).real
        dev1 = abs(asymptotics.hermite_poisson_sum("i1", x) - ref1) / abs(ref1)
        out.append(CheckResult(f"order-1 resummation, x={x:g}", float(dev1), 1e-9))
    for x in (4.0, 16.0, 64.0):
        for theta in (0.0, 0.3, math.pi / 2):
            ref = bessel_i(0, x * complex(math.cos(theta), math.sin(theta)))
            dev = abs(asymptotics.hermite_poisson_sum("phased", x, theta) - ref) / abs(ref)
            out.append(
                CheckResult(f"phased resummation, x={x:g}, theta={theta:.4g}", float(dev), 1e-8)
            )
    return out


SUITES = {
    "parity": parity_suite,
    "localization": localization_suite,
    "counting": counting_suite,
    "radon": radon_suite,
    "appendix": appendix_suite,
}


def run_suite(name: str) -> list[CheckResult]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r} (choose from {', '.join(SUITES)})"
        ) from None
    return suite()
