"""Run-configuration parsing: flat key-value text with repeated [mode] sections.

Example::

    detuning_ratio = 0.0
    time_start = 0.0
    time_stop = 60.0
    time_steps = 1201
    observables = inversion, wigner_origin

    [mode]
    kind = coherent
    alpha_re = 8.0
    n_max = 140
    k = 1

Lines starting with '#' are comments.  Every key is checked; unknown keys,
malformed values and missing fields are reported with their line number.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .dynamics import SystemConfig
from .errors import ConfigError
from .fock import DEFAULT_EPS_TAIL, ModeConfig, cat, coherent, number
from .observables import OBSERVABLE_NAMES

__all__ = ["ModeSpec", "RunConfig", "build_system", "parse_config", "parse_config_file"]

_GLOBAL_KEYS = {
    "detuning_ratio",
    "time_start",
    "time_stop",
    "time_steps",
    "observables",
    "output",
    "eps_tail",
}
_MODE_KEYS = {"kind", "alpha_re", "alpha_im", "m", "n_max", "k"}
_KINDS = ("coherent", "even_cat", "odd_cat", "number")


@dataclass
class ModeSpec:
    """One [mode] section: state recipe plus transition parameter."""

    kind: str
    n_max: int
    k: int
    alpha: complex = 0.0
    m: int = 0
    line: int = 0  # line of the [mode] header, for diagnostics


@dataclass
class RunConfig:
    modes: list[ModeSpec]
    time_start: float
    time_stop: float
    time_steps: int
    observables: tuple[str, ...]
    detuning_ratio: float = 0.0
    output: str | None = None
    eps_tail: float = DEFAULT_EPS_TAIL

    def coherent_amplitude(self) -> float | None:
        """|alpha| of the single coherent mode, when that is what was set up."""
        if len(self.modes) == 1 and self.modes[0].kind == "coherent":
            return abs(self.modes[0].alpha)
        return None


def parse_config_file(path) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    return parse_config(text)


def parse_config(text: str) -> RunConfig:
    globals_: dict[str, tuple[str, int]] = {}
    mode_sections: list[dict[str, tuple[str, int]]] = []
    mode_lines: list[int] = []
    current: dict[str, tuple[str, int]] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if line != "[mode]":
                raise ConfigError(f"unknown section {line!r}", lineno)
            current = {}
            mode_sections.append(current)
            mode_lines.append(lineno)
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if current is None:
            if key not in _GLOBAL_KEYS:
                raise ConfigError(f"unknown key {key!r}", lineno)
            if key in globals_:
                raise ConfigError(f"duplicate key {key!r}", lineno)
            globals_[key] = (value, lineno)
        else:
            if key not in _MODE_KEYS:
                raise ConfigError(f"unknown mode key {key!r}", lineno)
            if key in current:
                raise ConfigError(f"duplicate mode key {key!r}", lineno)
            current[key] = (value, lineno)

    if not mode_sections:
        raise ConfigError("at least one [mode] section is required")
    modes = [
        _parse_mode(section, header_line)
        for section, header_line in zip(mode_sections, mode_lines)
    ]

    time_start = _get_float(globals_, "time_start")
    time_stop = _get_float(globals_, "time_stop")
    time_steps = _get_int(globals_, "time_steps")
    if time_steps < 2:
        raise ConfigError("time_steps must be >= 2", globals_["time_steps"][1])
    if not time_stop > time_start:
        raise ConfigError("time_stop must exceed time_start", globals_["time_stop"][1])

    raw_obs, obs_line = _require(globals_, "observables")
    observables = tuple(o.strip() for o in raw_obs.split(",") if o.strip())
    if not observables:
        raise ConfigError("observables list is empty", obs_line)
    for o in observables:
        if o not in OBSERVABLE_NAMES:
            raise ConfigError(
                f"unknown observable {o!r} (choose from {', '.join(OBSERVABLE_NAMES)})",
                obs_line,
            )
    if len(set(observables)) != len(observables):
        raise ConfigError("duplicate observable", obs_line)

    detuning = 0.0
    if "detuning_ratio" in globals_:
        detuning = _get_float(globals_, "detuning_ratio")
    eps_tail = DEFAULT_EPS_TAIL
    if "eps_tail" in globals_:
        eps_tail = _get_float(globals_, "eps_tail")
        if eps_tail <= 0:
            raise ConfigError("eps_tail must be positive", globals_["eps_tail"][1])
    output = globals_["output"][0] if "output" in globals_ else None

    return RunConfig(
        modes=modes,
        time_start=time_start,
        time_stop=time_stop,
        time_steps=time_steps,
        observables=observables,
        detuning_ratio=detuning,
        output=output,
        eps_tail=eps_tail,
    )


def build_system(rc: RunConfig) -> SystemConfig:
    """Instantiate the mode states; recipe failures name the mode index."""
    modes = []
    for idx, spec in enumerate(rc.modes):
        try:
            if spec.kind == "coherent":
                state = coherent(spec.alpha, spec.n_max, eps_tail=rc.eps_tail)
            elif spec.kind == "even_cat":
                state = cat(spec.alpha, "even", spec.n_max, eps_tail=rc.eps_tail)
            elif spec.kind == "odd_cat":
                state = cat(spec.alpha, "odd", spec.n_max, eps_tail=rc.eps_tail)
            else:
                state = number(spec.m, spec.n_max)
            modes.append(ModeConfig(k=spec.k, state=state))
        except ConfigError:
            raise
        except Exception as exc:
            raise ConfigError(f"mode {idx + 1}: {exc}", spec.line) from exc
    return SystemConfig(modes=modes, detuning_ratio=rc.detuning_ratio)


def _parse_mode(section, header_line: int) -> ModeSpec:
    kind, kind_line = _require(section, "kind", header_line)
    if kind not in _KINDS:
        raise ConfigError(
            f"unknown kind {kind!r} (choose from {', '.join(_KINDS)})", kind_line
        )
    n_max = _get_int(section, "n_max", header_line)
    k = _get_int(section, "k", header_line)
    alpha = 0.0 + 0.0j
    m = 0
    if kind == "number":
        for bad in ("alpha_re", "alpha_im"):
            if bad in section:
                raise ConfigError(f"{bad!r} is meaningless for number states", section[bad][1])
        m = _get_int(section, "m", header_line)
    else:
        if "m" in section:
            raise ConfigError("'m' applies only to number states", section["m"][1])
        re = _get_float(section, "alpha_re", header_line) if "alpha_re" in section else 0.0
        im = _get_float(section, "alpha_im", header_line) if "alpha_im" in section else 0.0
        alpha = complex(re, im)
    return ModeSpec(kind=kind, n_max=n_max, k=k, alpha=alpha, m=m, line=header_line)


def _require(table, key: str, context_line: int | None = None):
    if key not in table:
        raise ConfigError(f"missing required key {key!r}", context_line)
    return table[key]


def _get_float(table, key: str, context_line: int | None = None) -> float:
    value, lineno = _require(table, key, context_line)
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{key!r} must be a number, got {value!r}", lineno) from None


def _get_int(table, key: str, context_line: int | None = None) -> int:
    value, lineno = _require(table, key, context_line)
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key!r} must be an integer, got {value!r}", lineno) from None
