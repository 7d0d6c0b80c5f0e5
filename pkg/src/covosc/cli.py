"""Command-line entry point: tabulate figure data and run the validation suite.

Exit codes: 0 success, 2 usage or configuration error, 3 numerical-accuracy error.
Options can come from a JSON file (``--config``); flags given on the command
line take precedence over file values.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .entropy import (
    density_spectrum,
    entropy_closed_form,
    reduce_over_time,
    temperature_from_rapidity,
    velocity_temperature_curve,
    von_neumann_entropy,
)
from .errors import AccuracyError, DomainError, NumericalError
from .export import FORMATS, write_table
from .oscillator import GridSpec, ellipse_axes, sample_probability_grid
from .parton import longitudinal_parton_density
from .validation import run_all

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ACCURACY = 3

COMMANDS = ("squeeze-grid", "entropy-table", "spectrum", "parton", "temp-curve", "validate")


class ConfigError(ValueError):
    pass


def parse_range(text: str, name: str) -> tuple[float, float, int]:
    """Parse ``start:stop:steps``."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"{name} must look like start:stop:steps, got {text!r}")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"cannot parse {name} {text!r}: {exc}") from None
    return start, stop, steps


@dataclass
class RunConfig:
    command: str
    eta: float | None = None
    eta_range: tuple[float, float, int] | None = None
    temp_range: tuple[float, float, int] | None = None
    half_width: float | None = None
    n_points: int | None = None
    numeric: bool = False
    scaled: bool = False
    format: str = "csv"
    out: Path | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.n_points is not None and self.n_points < 8:
            raise ConfigError(f"n_points must be >= 8, got {self.n_points}")
        if self.half_width is not None and not (self.half_width > 0 and math.isfinite(self.half_width)):
            raise ConfigError(f"half_width must be positive, got {self.half_width}")
        if self.command != "validate" and self.out is None:
            raise ConfigError("an output path is required (--out PATH)")
        if self.command in ("squeeze-grid", "spectrum", "parton"):
            if self.eta is None:
                raise ConfigError(f"{self.command} needs --eta")
            if not math.isfinite(self.eta):
                raise ConfigError(f"eta must be finite, got {self.eta}")
        if self.command == "entropy-table":
            self._check_range(self.eta_range, "eta-range")
        if self.command == "temp-curve":
            start, stop, _ = self._check_range(self.temp_range, "temp-range")
            if min(start, stop) <= 0:
                raise ConfigError("temperatures must be positive")

    @staticmethod
    def _check_range(rng, name):
        if rng is None:
            raise ConfigError(f"--{name} is required")
        start, stop, steps = rng
        if not (math.isfinite(start) and math.isfinite(stop)):
            raise ConfigError(f"{name} bounds must be finite")
        if steps < 2:
            raise ConfigError(f"{name} needs at least 2 steps, got {steps}")
        if start == stop:
            raise ConfigError(f"{name} is empty")
        return rng

    def grid(self, eta: float) -> GridSpec:
        return GridSpec.for_rapidity(eta, n_points=self.n_points, half_width=self.half_width)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # defaults are None so that file values survive unless a flag is given
    common.add_argument("--config", type=Path, help="JSON file with option values")
    common.add_argument("--eta", type=float)
    common.add_argument("--eta-range", metavar="A:B:N")
    common.add_argument("--temp-range", metavar="A:B:N")
    common.add_argument("--half-width", type=float)
    common.add_argument("--n-points", type=int)
    common.add_argument("--numeric", action="store_true", default=None,
                        help="entropy-table: add the partial-trace entropy column")
    common.add_argument("--scaled", action="store_true", default=None,
                        help="parton: add the q_u/(e^eta sqrt 2) column")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--out", type=Path)

    parser = argparse.ArgumentParser(prog="covosc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("squeeze-grid", parents=[common], help="sampled |psi_eta|^2 on a (z, t) grid")
    sub.add_parser("entropy-table", parents=[common], help="entropy versus rapidity")
    sub.add_parser("spectrum", parents=[common], help="eigenvalues of the reduced density matrix")
    sub.add_parser("parton", parents=[common], help="longitudinal parton density")
    sub.add_parser("temp-curve", parents=[common], help="squared velocity versus temperature")
    sub.add_parser("validate", parents=[common], help="run the invariant and oracle checks")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config is not None:
        try:
            values = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(values, dict):
            raise ConfigError("config file must hold a JSON object")
        values = {k.replace("-", "_"): v for k, v in values.items()}
    for key, value in vars(args).items():
        if key not in ("config", "command") and value is not None:
            values[key] = value

    known = {f.name for f in fields(RunConfig)} - {"command"}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    try:
        for key in ("eta_range", "temp_range"):
            if isinstance(values.get(key), str):
                values[key] = parse_range(values[key], key.replace("_", "-"))
            elif values.get(key) is not None:
                a, b, n = values[key]
                values[key] = (float(a), float(b), int(n))
        if values.get("eta") is not None:
            values["eta"] = float(values["eta"])
        if values.get("half_width") is not None:
            values["half_width"] = float(values["half_width"])
        if values.get("n_points") is not None:
            values["n_points"] = int(values["n_points"])
        if values.get("out") is not None:
            values["out"] = Path(values["out"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid config value: {exc}") from None
    cfg = RunConfig(command=args.command, **values)
    cfg.validate()
    return cfg


def _linspace(rng) -> np.ndarray:
    start, stop, steps = rng
    return np.linspace(start, stop, steps)


def cmd_squeeze_grid(cfg: RunConfig) -> int:
    grid = cfg.grid(cfg.eta)
    field = sample_probability_grid(cfg.eta, grid)
    axes = ellipse_axes(cfg.eta)
    meta = {"eta": cfg.eta, "half_width": grid.half_width, "n_points": grid.n_points}
    write_table(cfg.out, ("z", "t", "density"), field.to_rows(), cfg.format, meta)
    sidecar = {
        "eta": cfg.eta,
        "major_axis": axes.major_axis,
        "minor_axis": axes.minor_axis,
        "orientation": axes.orientation,
        "area_ratio": axes.area_ratio,
    }
    Path(str(cfg.out) + ".ellipse.json").write_text(json.dumps(sidecar, indent=1) + "\n")
    return EXIT_OK


def cmd_entropy_table(cfg: RunConfig) -> int:
    columns = ["eta", "S_closed_form"]
    if cfg.numeric:
        columns += ["S_numeric", "abs_diff"]
    columns += ["T", "beta2"]
    rows = []
    for eta in _linspace(cfg.eta_range):
        eta = float(eta)
        s = entropy_closed_form(eta)
        row = [eta, s]
        if cfg.numeric:
            s_num = von_neumann_entropy(density_spectrum(reduce_over_time(eta, cfg.grid(eta))))
            row += [s_num, abs(s_num - s)]
        row += [temperature_from_rapidity(eta).temperature, math.tanh(eta) ** 2]
        rows.append(row)
    meta = {"n_points": cfg.n_points, "half_width": cfg.half_width, "numeric": cfg.numeric}
    write_table(cfg.out, columns, rows, cfg.format, meta)
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    grid = cfg.grid(cfg.eta)
    spectrum = density_spectrum(reduce_over_time(cfg.eta, grid))
    rows = [(n, p) for n, p in enumerate(spectrum.probs)]
    meta = {"eta": cfg.eta, "half_width": grid.half_width, "n_points": grid.n_points,
            "entropy": von_neumann_entropy(spectrum)}
    write_table(cfg.out, ("n", "prob"), rows, cfg.format, meta)
    return EXIT_OK


def cmd_parton(cfg: RunConfig) -> int:
    axis = None
    if cfg.n_points is not None or cfg.half_width is not None:
        axis = GridSpec(cfg.half_width or 6.0 * math.exp(cfg.eta), cfg.n_points or 512)
    dens = longitudinal_parton_density(cfg.eta, axis)
    columns = ["q_u", "density"]
    cols = [dens.axis, dens.density]
    if cfg.scaled:
        columns.append("q_scaled")
        cols.append(dens.scaled_axis())
    meta = {"eta": cfg.eta, "variance": dens.variance()}
    write_table(cfg.out, columns, zip(*cols), cfg.format, meta)
    return EXIT_OK


def cmd_temp_curve(cfg: RunConfig) -> int:
    curve = velocity_temperature_curve(_linspace(cfg.temp_range))
    write_table(cfg.out, ("T", "beta2", "eta"), curve.rows(), cfg.format, {"units": "hbar*omega/k = 1"})
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    results = run_all(n_points=cfg.n_points)
    for r in results:
        print(r.line())
    failed = [r.name for r in results if not r.passed]
    if cfg.out is not None:
        rows = [(r.name, int(r.passed), r.error, r.tolerance, r.detail) for r in results]
        write_table(cfg.out, ("check", "passed", "error", "tolerance", "detail"), rows, cfg.format)
    if failed:
        print(f"{len(failed)} check(s) failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_ACCURACY
    print(f"all {len(results)} checks passed")
    return EXIT_OK


HANDLERS = {
    "squeeze-grid": cmd_squeeze_grid,
    "entropy-table": cmd_entropy_table,
    "spectrum": cmd_spectrum,
    "parton": cmd_parton,
    "temp-curve": cmd_temp_curve,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        return HANDLERS[cfg.command](cfg)
    except (ConfigError, DomainError) as exc:
        print(f"covosc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AccuracyError, NumericalError) as exc:
        print(f"covosc: accuracy error: {exc}", file=sys.stderr)
        return EXIT_ACCURACY


if __name__ == "__main__":
    sys.exit(main())
