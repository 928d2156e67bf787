"""Command-line orchestrator producing CSV/JSON artifacts.

Four subcommands, one artifact file per invocation:

* ``evolve`` -- spectral evolution sweep: norms and energy components per time;
* ``norms``  -- oracle sweep: certified squared frequency-side norms per time;
* ``bounds`` -- inequality-chain verification: one row per bound check;
* ``fit``    -- growth-law fit of a norms CSV, written as a JSON report.

Every CSV starts with a schema comment line ``# imbq-csv <kind> v1`` followed
by a header row; parsers reject unknown schema versions.  Floats are written
with 17 significant digits so downstream fits are not quantization-limited.
Identical configuration (and cache state) yields byte-identical output.

Exit codes: 0 all checks pass, 1 bound-check failure, 2 configuration error,
3 quadrature accuracy failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field, fields, replace

import numpy as np

from .bounds import default_sweep
from .errors import AccuracyError, DomainError, UsageError
from .growth import NormSeries, fit_growth, sandwich_constants
from .oracle import norm_sq_exact_detailed
from .presets import get_preset
from .quadrature import QuadratureConfig
from .solver import GridSpec, energy, evolve, field_from_preset, l2_norm, spectral_norm_sq, zero_field

__all__ = ["RunConfig", "main", "cmd_evolve", "cmd_norms", "cmd_bounds", "cmd_fit"]

CSV_SCHEMAS = {
    "evolve": "# imbq-csv evolve v1",
    "norms": "# imbq-csv norms v1",
    "bounds": "# imbq-csv bounds v1",
}

EVOLVE_COLUMNS = (
    "t",
    "norm_l2_x",
    "norm_l2_xi",
    "energy_total",
    "energy_kinetic",
    "energy_grad_kinetic",
    "energy_potential",
)
NORMS_COLUMNS = ("t", "norm_sq_xi", "quad_error_est", "panel_count")
BOUNDS_COLUMNS = ("name", "t", "direction", "lhs", "rhs", "margin", "pass", "constants")

_SWEEP_DEFAULTS = {
    "evolve": (1.0, 1e3, 17),
    "norms": (1e2, 1e6, 64),
    "bounds": (1e2, 1e5, 4),
}


@dataclass
class RunConfig:
    """Declarative run description; every downstream constraint re-validated."""

    dim: int = 1
    preset: str = "gaussian"
    preset_params: dict = field(default_factory=dict)
    gamma: float = 1.0
    delta0: float = 0.99
    t_min: float | None = None
    t_max: float | None = None
    count: int | None = None
    grid_half_width: float | None = None
    grid_points: int = 4096
    tol: float = 1e-8
    out: str = "out.csv"
    format: str = "csv"
    input: str | None = None

    def sweep(self, command: str) -> np.ndarray:
        lo, hi, n = _SWEEP_DEFAULTS[command]
        lo = self.t_min if self.t_min is not None else lo
        hi = self.t_max if self.t_max is not None else hi
        n = self.count if self.count is not None else n
        if not (0 < lo <= hi) or n < 1:
            raise UsageError("need 0 < t_min <= t_max and count >= 1")
        return np.geomspace(lo, hi, n) if n > 1 else np.asarray([lo])

    def make_preset(self):
        if self.dim not in (1, 2, 3):
            raise UsageError("--dim must be 1, 2 or 3")
        return get_preset(self.preset, self.dim, **self.preset_params)

    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(rel_tol=self.tol)


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.17e}"
    return str(value)


def _write_rows(kind: str, columns, rows, config: RunConfig) -> None:
    if config.format == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        text = json.dumps({"schema": CSV_SCHEMAS[kind].lstrip("# "), "rows": payload}, indent=2, sort_keys=True, default=_format_value)
        text += "\n"
    else:
        lines = [CSV_SCHEMAS[kind], ",".join(columns)]
        lines.extend(",".join(_format_value(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    with open(config.out, "w") as fh:
        fh.write(text)


def cmd_evolve(config: RunConfig) -> int:
    preset = config.make_preset()
    times = config.sweep("evolve")
    half_width = config.grid_half_width
    if half_width is None:
        half_width = preset.support_radius + float(times[-1]) + 10.0
    spec = GridSpec(config.dim, half_width, config.grid_points)
    u1 = field_from_preset(spec, preset)
    u0 = zero_field(spec)
    rows = []
    for t in np.concatenate([[0.0], times]):
        u, ut = evolve(u0, u1, float(t), aliasing="warn")
        bre = energy(u, ut)
        rows.append(
            (
                float(t),
                l2_norm(u),
                math.sqrt(spectral_norm_sq(u)),
                bre.total,
                bre.kinetic,
                bre.grad_kinetic,
                bre.potential,
            )
        )
    _write_rows("evolve", EVOLVE_COLUMNS, rows, config)
    return 0


def cmd_norms(config: RunConfig) -> int:
    preset = config.make_preset()
    cfg = config.quadrature()
    rows = [(0.0, 0.0, 0.0, 0)]
    for t in config.sweep("norms"):
        res = norm_sq_exact_detailed(preset, float(t), cfg)
        rows.append((float(t), res.value, res.error_bound, res.panel_count))
    _write_rows("norms", NORMS_COLUMNS, rows, config)
    return 0


def _constants_str(constants: dict) -> str:
    return ";".join(f"{k}={_format_value(v)}" for k, v in sorted(constants.items()))


def cmd_bounds(config: RunConfig) -> int:
    preset = config.make_preset()
    cfg = config.quadrature()
    checks = default_sweep(preset, config.sweep("bounds"), config.gamma, config.delta0, cfg)
    rows = [
        (
            c.name,
            c.t,
            c.direction,
            c.lhs,
            c.rhs,
            c.margin,
            c.passed,
            _constants_str(c.constants),
        )
        for c in checks
    ]
    _write_rows("bounds", BOUNDS_COLUMNS, rows, config)
    return 0 if all(c.passed for c in checks) else 1


def read_norms_csv(path: str) -> tuple[np.ndarray, np.ndarray]:
    """Parse a norms CSV, enforcing the schema version."""
    with open(path) as fh:
        schema = fh.readline().strip()
        if schema != CSV_SCHEMAS["norms"]:
            raise UsageError(f"unrecognized norms schema line {schema!r}")
        header = fh.readline().strip().split(",")
        if header[:2] != ["t", "norm_sq_xi"]:
            raise UsageError("norms CSV must start with columns t, norm_sq_xi")
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    if data.size == 0:
        return np.empty(0), np.empty(0)
    return data[:, 0], data[:, 1]


def cmd_fit(config: RunConfig) -> int:
    if not config.input:
        raise UsageError("fit needs --input pointing at a norms CSV")
    times, values = read_norms_csv(config.input)
    keep = times > 0
    preset = config.make_preset()
    series = NormSeries(
        dim=config.dim,
        preset_name=config.preset,
        times=times[keep],
        values_sq=values[keep],
        source="oracle",
    )
    t_min = config.t_min if config.t_min is not None else 100.0
    models = fit_growth(series, t_min=t_min)
    sandwich = sandwich_constants(series, preset, models[0], t_min=t_min)
    windowed = series.window(t_min)
    report = {
        "schema": "imbq-fit v1",
        "series": {
            "dim": config.dim,
            "preset": config.preset,
            "source": series.source,
            "samples": int(len(windowed.times)),
        },
        "window": {"t_min": float(windowed.times[0]), "t_max": float(windowed.times[-1])},
        "models": [
            {
                "kind": m.kind,
                "coefficient": m.coefficient,
                "intercept": m.intercept,
                "r_squared": m.r_squared,
                "residual_norm": m.residual_norm,
            }
            for m in models
        ],
        "sandwich": {
            "c_low": sandwich.c_low,
            "c_high": sandwich.c_high,
            "lower_theorem_constant": sandwich.lower_theorem_constant,
            "upper_theorem_constant": sandwich.upper_theorem_constant,
            "vacuous_lower": sandwich.vacuous_lower,
        },
    }
    out = config.out if config.out != "out.csv" else "fit.json"
    with open(out, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


_COMMANDS = {
    "evolve": cmd_evolve,
    "norms": cmd_norms,
    "bounds": cmd_bounds,
    "fit": cmd_fit,
}

_CONFIG_KEYS = {f.name for f in fields(RunConfig)}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="imbq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON file with RunConfig keys (flags override)")
        p.add_argument("--dim", type=int)
        p.add_argument("--preset")
        p.add_argument("--preset-params", help="JSON dict of preset family parameters")
        p.add_argument("--gamma", type=float)
        p.add_argument("--delta0", type=float)
        p.add_argument("--tmin", type=float, dest="t_min")
        p.add_argument("--tmax", type=float, dest="t_max")
        p.add_argument("--count", type=int)
        p.add_argument("--grid-R", type=float, dest="grid_half_width")
        p.add_argument("--grid-N", type=int, dest="grid_points")
        p.add_argument("--tol", type=float)
        p.add_argument("--out")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--input", help="input CSV (fit command)")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config:
        with open(args.config) as fh:
            file_values = json.load(fh)
        unknown = set(file_values) - _CONFIG_KEYS
        if unknown:
            raise UsageError(f"unknown config keys {sorted(unknown)}; valid: {sorted(_CONFIG_KEYS)}")
        config = replace(config, **file_values)
    overrides = {}
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "preset_params", None):
        overrides["preset_params"] = json.loads(args.preset_params)
    if overrides:
        config = replace(config, **overrides)
    return config


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        return _COMMANDS[args.command](config)
    except AccuracyError as exc:
        print(f"accuracy error: {exc} (estimate {exc.estimate!r})", file=sys.stderr)
        return 3
    except (DomainError, UsageError, OSError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
