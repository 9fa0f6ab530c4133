"""Command-line interface: config-driven runs and invariant suites.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import ConfigError, JCRevivalError
from .observables import sweep
from .runconfig import build_system, parse_config_file
from .verification import SUITES, run_suite

__all__ = ["entry", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jcrevival",
        description="Jaynes-Cummings revival dynamics and phase-space-origin observables",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="evaluate observables over a time grid")
    run_p.add_argument("--config", required=True, help="path to the run configuration")
    run_p.add_argument("--out", help="output CSV path (overrides the config's output)")
    run_p.add_argument("--threads", type=int, default=1, help="worker threads for the sweep")
    run_p.add_argument(
        "--split-columns",
        action="store_true",
        help="also write one two-column '<stem>_<observable>.txt' per column",
    )

    verify_p = sub.add_parser("verify", help="run a named invariant suite")
    verify_p.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify_p.add_argument("--threads", type=int, default=1, help="accepted for symmetry; unused")
    return parser


def _cmd_run(args) -> int:
    rc = parse_config_file(args.config)
    out_path = args.out or rc.output
    if not out_path:
        raise ConfigError("no output path: set 'output' in the config or pass --out")
    config = build_system(rc)
    n_bar = rc.coherent_amplitude()
    if ("estimator" in rc.observables or "asymptotics" in rc.observables) and n_bar is None:
        raise ConfigError(
            "estimator/asymptotics observables need a single coherent mode"
        )
    t = np.linspace(rc.time_start, rc.time_stop, rc.time_steps)
    series = sweep(config, t, rc.observables, n_bar=n_bar, threads=max(1, args.threads))
    series.write_csv(out_path)
    print(f"wrote {out_path} ({len(series.columns)} columns, {t.size} rows)")
    if args.split_columns:
        stem = Path(out_path)
        for name, col in series.columns.items():
            side = stem.with_name(f"{stem.stem}_{name}.txt")
            with open(side, "w", encoding="utf-8", newline="\n") as fh:
                for tv, cv in zip(series.t, col):
                    fh.write(f"{tv:.17g} {cv:.17g}\n")
            print(f"wrote {side}")
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        failed += 0 if res.passed else 1
        print(
            f"[{status}] {res.name}: max deviation {res.deviation:.3e}"
            f" (tolerance {res.tolerance:.1e})"
        )
    print(f"suite '{args.suite}': {len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_verify(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except JCRevivalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
