"""Command-line entry point.

Four subcommands map onto the scenario modes:

    sweep       passive_tha or dual_source distance sweeps
    wavelength  fringe-trace center-wavelength estimate
    ivfit       diode ideality fits over voltage windows
    leakage     leaked photon numbers for a table of drive settings

Each takes --config <path>, optional --out <path> (stdout otherwise)
and repeatable --override key=value flags applied on top of the file.
On failure a single machine-parseable line `error:<category>: message`
goes to stderr; exit status is 2 for configuration errors and 1 for
any other failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .errors import ConfigurationError, VoaleakError
from .scenario import (
    IVFIT_HEADER,
    LEAKAGE_HEADER,
    WAVELENGTH_HEADER,
    IvFitResult,
    LeakageResult,
    ScenarioResult,
    SweepResult,
    WavelengthResult,
    load_config,
    run_scenario,
    sweep_to_text,
)

# Which scenario modes each subcommand accepts.
_COMMAND_MODES = {
    "sweep": ("passive_tha", "dual_source"),
    "wavelength": ("fringe",),
    "ivfit": ("iv_fit",),
    "leakage": ("device",),
}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def format_result(result: ScenarioResult) -> str:
    """Render any scenario result as comma-separated text."""
    if isinstance(result, SweepResult):
        return sweep_to_text(result)
    if isinstance(result, WavelengthResult):
        row = (result.wavelength_nm,
               result.reference.u_max, result.reference.u_min,
               result.unknown.u_max, result.unknown.u_min)
        return WAVELENGTH_HEADER + "\n" + ",".join(_fmt(v) for v in row) + "\n"
    if isinstance(result, IvFitResult):
        lines = [IVFIT_HEADER]
        lines.extend(
            ",".join(_fmt(v) for v in
                     (f.v_lo, f.v_hi, f.slope, f.beta, f.temperature))
            for f in result.fits)
        return "\n".join(lines) + "\n"
    if isinstance(result, LeakageResult):
        lines = [LEAKAGE_HEADER]
        lines.extend(",".join(_fmt(v) for v in row) for row in result.rows)
        return "\n".join(lines) + "\n"
    raise TypeError(f"unknown result type {type(result).__name__}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voaleak",
        description=("Key-rate impact of parasitic emission from a "
                     "carrier-injection VOA in a decoy-state BB84 "
                     "transmitter."),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "sweep": "run a key-rate vs distance sweep",
        "wavelength": "estimate the emission center wavelength from fringes",
        "ivfit": "fit diode ideality factors from an I-V trace",
        "leakage": "convert drive configurations to leaked photon numbers",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", required=True, metavar="PATH",
                       help="scenario config file (flat key=value text)")
        p.add_argument("--out", metavar="PATH",
                       help="write the result table here instead of stdout")
        p.add_argument("--override", action="append", default=[],
                       metavar="KEY=VALUE",
                       help="override a config entry (repeatable)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config, overrides=args.override)
        allowed = _COMMAND_MODES[args.command]
        if config.mode not in allowed:
            raise ConfigurationError(
                f"subcommand {args.command!r} requires mode in "
                f"{allowed}, config has {config.mode!r}")
        text = format_result(run_scenario(config))
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    except VoaleakError as exc:
        print(f"error:{exc.category}: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ConfigurationError) else 1
    except OSError as exc:
        print(f"error:io: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
