"""Scenario configs, distance sweeps, and plain-text trace/result IO.

A scenario is described by a flat key=value text file with dotted
section prefixes, for example::

    mode = passive_tha
    channel.alpha_sig = 0.2
    intensities.s = 0.48
    leakage.mu = 0.0977
    sweep.distance_min = 0
    sweep.distance_max = 400
    sweep.step = 1

`load_config` parses and validates such a file (plus optional
key=value overrides), `run_scenario` dispatches on the mode, and the
emit/load helpers read and write the comma-separated artifacts. All
evaluation is pure floating-point arithmetic, so identical configs
produce byte-identical output files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, NamedTuple, Sequence, Union

import numpy as np

from .channel import ChannelParams, observables_for_intensity
from .decoy import DecoyObservations, SinglePhotonBounds, single_photon_bounds
from .errors import (
    ConfigurationError,
    DomainError,
    TraceParseError,
    TraceSchemaError,
)
from .fringe import ExtremaPair, FringeTrace, center_wavelength, find_extrema_pair
from .leakage import EmissionSpec, Placement, mean_photon_number
from .security import (
    DualSourceParams,
    KeyRatePoint,
    ThaParams,
    dual_source_key_rate,
    gllp_key_rate,
)
from .voa_physics import DEFAULT_FIT_WINDOWS, IdealityFit, IvCurve, fit_ideality

__all__ = [
    "MODES",
    "FRINGE_HEADER",
    "IV_HEADER",
    "RESULT_HEADER",
    "ScenarioConfig",
    "SweepRow",
    "SweepResult",
    "WavelengthResult",
    "IvFitResult",
    "LeakageRow",
    "LeakageResult",
    "parse_config_text",
    "apply_overrides",
    "config_from_mapping",
    "load_config",
    "run_scenario",
    "sweep_distances",
    "load_trace",
    "save_trace",
    "sweep_to_text",
    "emit_results",
    "read_results",
]

MODES = ("passive_tha", "dual_source", "fringe", "iv_fit", "device")

FRINGE_HEADER = "heater_voltage_v,count_rate_hz"
IV_HEADER = "voltage_v,current_a"
RESULT_HEADER = ("distance_km,rate_baseline,rate_contaminated,"
                 "q_s,e_s,y1_lower,e1_upper")

# Subcommand-specific output headers (same .17g cell format as results).
WAVELENGTH_HEADER = ("wavelength_nm,ref_u_max_v,ref_u_min_v,"
                     "unk_u_max_v,unk_u_min_v")
IVFIT_HEADER = "v_lo_v,v_hi_v,slope_decades_per_v,beta,temperature_k"
LEAKAGE_HEADER = "drive_voltage_v,count_rate_hz,pulse_width_s,mu"


# ============================================================
# Configuration
# ============================================================

@dataclass(frozen=True)
class ScenarioConfig:
    """Validated description of one scenario run.

    Attributes:
        mode: One of `MODES`.
        channel: Channel and receiver parameters (distance field is
            overwritten during sweeps).
        s, nu, omega: Signal and decoy intensities.
        p_z: Key-basis probability (pre-encoder analysis).
        q_proto: Sifting factor (post-encoder analysis).
        f_ec: Error-correction inefficiency.
        mu_leak: Leaked mean photon number used by the sweep modes.
        distance_min, distance_max, step: Sweep grid [km].
        emission: Driving configurations for device mode.
        reference_trace, unknown_trace, lambda_ref_nm, smooth_window:
            Fringe-mode inputs.
        iv_trace, temperature, windows: I-V fit mode inputs.
    """

    mode: str
    channel: ChannelParams = ChannelParams()
    s: float = 0.48
    nu: float = 0.02
    omega: float = 0.001
    p_z: float = 1.0
    q_proto: float = 0.5
    f_ec: float = 1.2
    mu_leak: float = 0.0
    distance_min: float = 0.0
    distance_max: float = 0.0
    step: float = 1.0
    emission: tuple[EmissionSpec, ...] = ()
    reference_trace: Path | None = None
    unknown_trace: Path | None = None
    lambda_ref_nm: float = 0.0
    smooth_window: int = 5
    iv_trace: Path | None = None
    temperature: float = 300.0
    windows: tuple[tuple[float, float], ...] = DEFAULT_FIT_WINDOWS

    def __post_init__(self):
        bad: list[str] = []
        if self.mode not in MODES:
            raise ConfigurationError(
                f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        if self.mode in ("passive_tha", "dual_source"):
            if not (math.isfinite(self.step) and self.step > 0.0):
                bad.append("sweep.step (must be > 0)")
            if not (math.isfinite(self.distance_min) and self.distance_min >= 0.0):
                bad.append("sweep.distance_min (must be >= 0)")
            if not self.distance_min <= self.distance_max:
                bad.append("sweep.distance_max (must be >= distance_min)")
            if not (math.isfinite(self.mu_leak) and self.mu_leak >= 0.0):
                bad.append("leakage.mu (must be >= 0)")
            if not self.s > self.nu > self.omega >= 0.0:
                bad.append("intensities (must satisfy s > nu > omega >= 0)")
            if not 0.0 < self.p_z <= 1.0:
                bad.append("conventions.p_z (must lie in (0, 1])")
            if not 0.0 < self.q_proto <= 1.0:
                bad.append("conventions.q_proto (must lie in (0, 1])")
            if self.f_ec < 1.0:
                bad.append("conventions.f_ec (must be >= 1)")
        elif self.mode == "fringe":
            if self.reference_trace is None:
                bad.append("fringe.reference_trace (required)")
            if self.unknown_trace is None:
                bad.append("fringe.unknown_trace (required)")
            if not (math.isfinite(self.lambda_ref_nm) and self.lambda_ref_nm > 0.0):
                bad.append("fringe.lambda_ref_nm (must be > 0)")
            if self.smooth_window < 1 or self.smooth_window % 2 == 0:
                bad.append("fringe.smooth_window (must be odd and >= 1)")
        elif self.mode == "iv_fit":
            if self.iv_trace is None:
                bad.append("ivfit.trace (required)")
            if not (math.isfinite(self.temperature) and self.temperature > 0.0):
                bad.append("ivfit.temperature (must be > 0)")
            if not self.windows:
                bad.append("ivfit.windows (at least one lo:hi window)")
        elif self.mode == "device":
            if not self.emission:
                bad.append("emission (at least one emission.N.* block)")
        if bad:
            raise ConfigurationError(
                "invalid configuration fields: " + "; ".join(bad))


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse flat key=value lines into an ordered mapping.

    Blank lines and lines starting with '#' are skipped. Keys must be
    unique.

    Raises:
        ConfigurationError: on a malformed line or duplicate key, with
            the line number in the message.
    """
    data: dict[str, str] = {}
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigurationError(
                f"{source}:{num}: expected key=value, got {line!r}")
        if key in data:
            raise ConfigurationError(f"{source}:{num}: duplicate key {key!r}")
        data[key] = value.strip()
    return data


def apply_overrides(data: dict[str, str], overrides: Sequence[str]) -> None:
    """Apply repeatable key=value overrides in place (replace or add)."""
    for item in overrides:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigurationError(f"override must be key=value, got {item!r}")
        data[key] = value.strip()


def _take_float(data: dict[str, str], key: str, default: float) -> float:
    if key not in data:
        return default
    raw = data.pop(key)
    try:
        return float(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: expected a number, got {raw!r}") from None


def _take_int(data: dict[str, str], key: str, default: int) -> int:
    if key not in data:
        return default
    raw = data.pop(key)
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: expected an integer, got {raw!r}") from None


def _take_path(data: dict[str, str], key: str, base_dir: Path) -> Path | None:
    if key not in data:
        return None
    raw = data.pop(key)
    if not raw:
        raise ConfigurationError(f"{key}: expected a file path")
    p = Path(raw)
    return p if p.is_absolute() else base_dir / p


def _parse_windows(raw: str) -> tuple[tuple[float, float], ...]:
    out = []
    for part in raw.split(","):
        lo, sep, hi = part.strip().partition(":")
        if not sep:
            raise ConfigurationError(
                f"ivfit.windows: expected lo:hi entries, got {part.strip()!r}")
        try:
            out.append((float(lo), float(hi)))
        except ValueError:
            raise ConfigurationError(
                f"ivfit.windows: non-numeric window edge in {part.strip()!r}"
            ) from None
    return tuple(out)


_CHANNEL_FIELDS = (
    "alpha_sig", "alpha_par", "eta_bob_sig", "eta_bob_par", "y0", "e_d")


def _take_channel(data: dict[str, str]) -> ChannelParams:
    defaults = ChannelParams()
    kwargs = {name: _take_float(data, f"channel.{name}", getattr(defaults, name))
              for name in _CHANNEL_FIELDS}
    if "channel.e0" in data and "conventions.e0" in data:
        raise ConfigurationError(
            "channel.e0 and conventions.e0 are aliases; set only one")
    e0 = _take_float(data, "channel.e0", defaults.e0)
    e0 = _take_float(data, "conventions.e0", e0)
    try:
        return ChannelParams(distance=0.0, e0=e0, **kwargs)
    except DomainError as exc:
        raise ConfigurationError(f"channel: {exc}") from exc


def _take_leakage(data: dict[str, str], placement: Placement) -> float:
    has_mu = "leakage.mu" in data
    has_counts = "leakage.count_rate" in data or "leakage.pulse_width" in data
    if has_mu and has_counts:
        raise ConfigurationError(
            "give either leakage.mu or leakage.count_rate/pulse_width, not both")
    if has_mu:
        return _take_float(data, "leakage.mu", 0.0)
    if not has_counts:
        return 0.0
    if "leakage.count_rate" not in data or "leakage.pulse_width" not in data:
        raise ConfigurationError(
            "leakage.count_rate and leakage.pulse_width must be given together")
    spec = EmissionSpec(
        drive_voltage=_take_float(data, "leakage.drive_voltage", 0.0),
        count_rate=_take_float(data, "leakage.count_rate", 0.0),
        pulse_width=_take_float(data, "leakage.pulse_width", 0.0),
    )
    return mean_photon_number(spec, placement).mu


def _take_emission(data: dict[str, str]) -> tuple[EmissionSpec, ...]:
    indices = set()
    for key in data:
        if key.startswith("emission."):
            parts = key.split(".")
            if len(parts) != 3 or not parts[1].isdigit():
                raise ConfigurationError(
                    f"emission keys must look like emission.N.field, got {key!r}")
            indices.add(int(parts[1]))
    if not indices:
        return ()
    if min(indices) != 1 or max(indices) != len(indices):
        raise ConfigurationError(
            "emission blocks must be numbered 1..N without gaps, got "
            f"{sorted(indices)}")
    specs = []
    for n in sorted(indices):
        prefix = f"emission.{n}."
        if f"{prefix}count_rate" not in data or f"{prefix}pulse_width" not in data:
            raise ConfigurationError(
                f"emission block {n} needs count_rate and pulse_width")
        specs.append(EmissionSpec(
            drive_voltage=_take_float(data, f"{prefix}drive_voltage", 0.0),
            count_rate=_take_float(data, f"{prefix}count_rate", 0.0),
            pulse_width=_take_float(data, f"{prefix}pulse_width", 0.0),
        ))
    return tuple(specs)


def config_from_mapping(
    data: Mapping[str, str], base_dir: Path | str = "."
) -> ScenarioConfig:
    """Build a validated ScenarioConfig from a parsed key=value mapping.

    Relative trace paths are resolved against base_dir. Unrecognized
    keys are an error so typos cannot silently fall back to defaults.
    """
    data = dict(data)
    base_dir = Path(base_dir)
    if "mode" not in data:
        raise ConfigurationError("missing required key 'mode'")
    mode = data.pop("mode")
    if mode not in MODES:
        raise ConfigurationError(
            f"mode must be one of {', '.join(MODES)}, got {mode!r}")

    channel = _take_channel(data)
    placement = (Placement.POST_ENCODER if mode == "dual_source"
                 else Placement.PRE_ENCODER)
    config = ScenarioConfig(
        mode=mode,
        channel=channel,
        s=_take_float(data, "intensities.s", 0.48),
        nu=_take_float(data, "intensities.nu", 0.02),
        omega=_take_float(data, "intensities.omega", 0.001),
        p_z=_take_float(data, "conventions.p_z", 1.0),
        q_proto=_take_float(data, "conventions.q_proto", 0.5),
        f_ec=_take_float(data, "conventions.f_ec", 1.2),
        mu_leak=_take_leakage(data, placement),
        distance_min=_take_float(data, "sweep.distance_min", 0.0),
        distance_max=_take_float(data, "sweep.distance_max", 0.0),
        step=_take_float(data, "sweep.step", 1.0),
        emission=_take_emission(data),
        reference_trace=_take_path(data, "fringe.reference_trace", base_dir),
        unknown_trace=_take_path(data, "fringe.unknown_trace", base_dir),
        lambda_ref_nm=_take_float(data, "fringe.lambda_ref_nm", 0.0),
        smooth_window=_take_int(data, "fringe.smooth_window", 5),
        iv_trace=_take_path(data, "ivfit.trace", base_dir),
        temperature=_take_float(data, "ivfit.temperature", 300.0),
        windows=(_parse_windows(data.pop("ivfit.windows"))
                 if "ivfit.windows" in data else DEFAULT_FIT_WINDOWS),
    )
    if data:
        raise ConfigurationError(
            "unrecognized keys: " + ", ".join(sorted(data)))
    return config


def load_config(
    path: Path | str, overrides: Sequence[str] = ()
) -> ScenarioConfig:
    """Load, override, and validate a scenario config file."""
    path = Path(path)
    data = parse_config_text(path.read_text(), source=str(path))
    apply_overrides(data, overrides)
    return config_from_mapping(data, base_dir=path.parent)


# ============================================================
# Results
# ============================================================

class SweepRow(NamedTuple):
    """One distance point of a sweep (column order matches the CSV)."""

    distance_km: float
    rate_baseline: float
    rate_contaminated: float
    q_s: float
    e_s: float
    y1_lower: float
    e1_upper: float


@dataclass(frozen=True)
class SweepResult:
    """Key-rate sweep over distance for one scenario.

    rate_baseline is the leak-free curve; rate_contaminated applies the
    configured leakage (pre-encoder coin bound or post-encoder
    dual-source model depending on the scenario mode).
    """

    rows: tuple[SweepRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(SweepRow(*r) for r in self.rows))
        dists = [r.distance_km for r in self.rows]
        if any(b <= a for a, b in zip(dists, dists[1:])):
            raise DomainError("sweep distances must be strictly ascending")
        for r in self.rows:
            if r.rate_baseline < 0.0 or r.rate_contaminated < 0.0:
                raise DomainError("key rates must be >= 0")

    def __len__(self) -> int:
        return len(self.rows)

    def baseline_points(self) -> list[KeyRatePoint]:
        return [KeyRatePoint(r.distance_km, r.rate_baseline) for r in self.rows]

    def contaminated_points(self) -> list[KeyRatePoint]:
        return [KeyRatePoint(r.distance_km, r.rate_contaminated)
                for r in self.rows]


@dataclass(frozen=True)
class WavelengthResult:
    """Center wavelength estimate plus the extrema it came from."""

    wavelength_nm: float
    reference: ExtremaPair
    unknown: ExtremaPair


@dataclass(frozen=True)
class IvFitResult:
    """Ideality fits for each configured voltage window."""

    fits: tuple[IdealityFit, ...]


class LeakageRow(NamedTuple):
    """Leaked mean photon number for one driving configuration."""

    drive_voltage: float
    count_rate: float
    pulse_width: float
    mu: float


@dataclass(frozen=True)
class LeakageResult:
    """Leakage intensities for the configured emission table."""

    rows: tuple[LeakageRow, ...]


ScenarioResult = Union[SweepResult, WavelengthResult, IvFitResult, LeakageResult]


# ============================================================
# Scenario evaluation
# ============================================================

def sweep_distances(config: ScenarioConfig) -> list[float]:
    """Arithmetic distance grid min, min+step, ... capped at max.

    Each point is computed as min + k*step (no cumulative summation),
    so the grid is exactly reproducible. A small relative tolerance
    keeps an intended endpoint from being dropped to floating-point
    rounding of (max - min)/step.
    """
    span = config.distance_max - config.distance_min
    n = int(math.floor(span / config.step + 1e-9)) + 1
    return [config.distance_min + k * config.step for k in range(n)]


def _decoy_observables(
    ch: ChannelParams, s: float, nu: float, omega: float, mu_el: float
) -> DecoyObservations:
    obs_s = observables_for_intensity(s, mu_el, ch)
    obs_n = observables_for_intensity(nu, mu_el, ch)
    obs_w = observables_for_intensity(omega, mu_el, ch)
    return DecoyObservations(
        s=s, nu=nu, omega=omega,
        q_s=obs_s.gain, q_nu=obs_n.gain, q_omega=obs_w.gain,
        e_s=obs_s.qber, e_nu=obs_n.qber, e_omega=obs_w.qber,
    )


def _sweep_passive(config: ScenarioConfig) -> SweepResult:
    # Pre-encoder leakage never reaches Bob, so the channel observables
    # are leak-free; only the privacy amplification term changes.
    tha_base = ThaParams(mu_eve=0.0, p_z=config.p_z, f_ec=config.f_ec)
    tha_leak = ThaParams(mu_eve=config.mu_leak, p_z=config.p_z, f_ec=config.f_ec)
    rows = []
    for d in sweep_distances(config):
        ch = replace(config.channel, distance=d)
        obs = _decoy_observables(ch, config.s, config.nu, config.omega, 0.0)
        bounds = single_photon_bounds(obs)
        rows.append(SweepRow(
            distance_km=d,
            rate_baseline=gllp_key_rate(obs, bounds, tha_base),
            rate_contaminated=gllp_key_rate(obs, bounds, tha_leak),
            q_s=obs.q_s, e_s=obs.e_s,
            y1_lower=bounds.y1_lower, e1_upper=bounds.e1_upper,
        ))
    return SweepResult(tuple(rows))


def _sweep_dual(config: ScenarioConfig) -> SweepResult:
    # Post-encoder leakage rides down the fiber with every intensity
    # setting, so the decoy observables themselves are contaminated.
    params = DualSourceParams(q_proto=config.q_proto, f_ec=config.f_ec)
    rows = []
    for d in sweep_distances(config):
        ch = replace(config.channel, distance=d)
        obs_base = _decoy_observables(ch, config.s, config.nu, config.omega, 0.0)
        b_base = single_photon_bounds(obs_base)
        obs_leak = _decoy_observables(
            ch, config.s, config.nu, config.omega, config.mu_leak)
        b_leak = single_photon_bounds(obs_leak)
        rows.append(SweepRow(
            distance_km=d,
            rate_baseline=dual_source_key_rate(obs_base, b_base, params),
            rate_contaminated=dual_source_key_rate(obs_leak, b_leak, params),
            q_s=obs_leak.q_s, e_s=obs_leak.e_s,
            y1_lower=b_leak.y1_lower, e1_upper=b_leak.e1_upper,
        ))
    return SweepResult(tuple(rows))


def _run_fringe(config: ScenarioConfig) -> WavelengthResult:
    reference = find_extrema_pair(
        load_trace(config.reference_trace, "fringe"), config.smooth_window)
    unknown = find_extrema_pair(
        load_trace(config.unknown_trace, "fringe"), config.smooth_window)
    wl = center_wavelength(config.lambda_ref_nm, reference, unknown)
    return WavelengthResult(wavelength_nm=wl, reference=reference,
                            unknown=unknown)


def _run_iv_fit(config: ScenarioConfig) -> IvFitResult:
    iv = load_trace(config.iv_trace, "iv")
    fits = tuple(fit_ideality(iv, lo, hi, config.temperature)
                 for lo, hi in config.windows)
    return IvFitResult(fits=fits)


def _run_device(config: ScenarioConfig) -> LeakageResult:
    rows = []
    for spec in config.emission:
        mu = mean_photon_number(spec).mu
        rows.append(LeakageRow(spec.drive_voltage, spec.count_rate,
                               spec.pulse_width, mu))
    return LeakageResult(rows=tuple(rows))


def run_scenario(config: ScenarioConfig) -> ScenarioResult:
    """Evaluate one validated scenario.

    Sweep modes return a SweepResult; fringe, iv_fit and device modes
    return their respective result records. Deterministic: identical
    configs yield identical results.
    """
    if config.mode == "passive_tha":
        return _sweep_passive(config)
    if config.mode == "dual_source":
        return _sweep_dual(config)
    if config.mode == "fringe":
        return _run_fringe(config)
    if config.mode == "iv_fit":
        return _run_iv_fit(config)
    return _run_device(config)


# ============================================================
# Text IO
# ============================================================

def _fmt(x: float) -> str:
    # 17 significant digits round-trip any IEEE double exactly.
    return format(float(x), ".17g")


def load_trace(path: Path | str, kind: str) -> FringeTrace | IvCurve:
    """Load a two-column comma-separated trace file.

    Args:
        path: File to read.
        kind: "fringe" (header heater_voltage_v,count_rate_hz) or
            "iv" (header voltage_v,current_a).

    Returns:
        FringeTrace or IvCurve matching kind.

    Raises:
        ConfigurationError: unknown kind.
        TraceSchemaError: wrong header or a constraint violation such
            as non-increasing voltages.
        TraceParseError: malformed data row (carries the line number).
    """
    if kind not in ("fringe", "iv"):
        raise ConfigurationError(f"kind must be 'fringe' or 'iv', got {kind!r}")
    path = Path(path)
    expected = FRINGE_HEADER if kind == "fringe" else IV_HEADER
    lines = path.read_text().splitlines()
    if not lines or lines[0].strip() != expected:
        raise TraceSchemaError(f"{path}: expected header {expected!r}")
    xs: list[float] = []
    ys: list[float] = []
    for num, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise TraceParseError(
                f"{path}:{num}: expected two comma-separated fields", line=num)
        try:
            xs.append(float(parts[0]))
            ys.append(float(parts[1]))
        except ValueError:
            raise TraceParseError(
                f"{path}:{num}: non-numeric field in {line!r}", line=num
            ) from None
    try:
        if kind == "fringe":
            return FringeTrace(np.asarray(xs), np.asarray(ys))
        return IvCurve(np.asarray(xs), np.asarray(ys))
    except DomainError as exc:
        raise TraceSchemaError(f"{path}: {exc}") from exc


def save_trace(trace: FringeTrace | IvCurve, path: Path | str) -> None:
    """Write a trace in the same two-column format load_trace reads."""
    path = Path(path)
    if isinstance(trace, FringeTrace):
        header, xs, ys = FRINGE_HEADER, trace.voltages, trace.counts
    elif isinstance(trace, IvCurve):
        header, xs, ys = IV_HEADER, trace.voltages, trace.currents
    else:
        raise ConfigurationError(
            f"expected FringeTrace or IvCurve, got {type(trace).__name__}")
    lines = [header]
    lines.extend(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))
    path.write_text("\n".join(lines) + "\n")


def sweep_to_text(result: SweepResult) -> str:
    """Render a sweep as the canonical results CSV text."""
    lines = [RESULT_HEADER]
    lines.extend(",".join(_fmt(v) for v in row) for row in result.rows)
    return "\n".join(lines) + "\n"


def emit_results(result: SweepResult, path: Path | str) -> None:
    """Write the results table; see RESULT_HEADER for the schema."""
    Path(path).write_text(sweep_to_text(result))


def read_results(path: Path | str) -> SweepResult:
    """Reload a results table written by emit_results."""
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines or lines[0].strip() != RESULT_HEADER:
        raise TraceSchemaError(f"{path}: expected header {RESULT_HEADER!r}")
    rows = []
    for num, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 7:
            raise TraceParseError(
                f"{path}:{num}: expected seven comma-separated fields", line=num)
        try:
            rows.append(SweepRow(*(float(p) for p in parts)))
        except ValueError:
            raise TraceParseError(
                f"{path}:{num}: non-numeric field in {line!r}", line=num
            ) from None
    return SweepResult(tuple(rows))
