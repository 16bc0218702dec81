"""Command-line front end: parameter sweeps over the sheet-model operations.

Each subcommand sweeps one axis, evaluates one physics operation per grid
point, and writes a machine-readable table (CSV with a '#'-comment metadata
preamble, or JSON with a metadata object). Output is fully deterministic:
identical configuration produces identical bytes, so no wall-clock
timestamps are recorded. Rows whose evaluation raises a physics error stay
in the table with blank output cells and the message in the final 'error'
column; any such row turns the exit status to 1. Invalid configuration
exits with status 2 before any row is computed.

Lengths are in user-chosen base units (the model is scale covariant);
default output columns are dimensionless combinations where one exists, and
--raw-units adds the dimensionful values where they differ.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from importlib import metadata as importlib_metadata

import numpy as np

from .casimir import lifshitz_pressure, reduced_energy_parts
from .errors import SheetModelError
from .polder import (
    AtomProperties,
    casimir_polder_energy,
    charge_sheet_energy,
    reduction_functions,
)
from .sheet import (
    MinkowskiMomentum,
    SheetParameters,
    reflection_te,
    reflection_tm,
    tm_plasmon_closed,
    tm_plasmon_root,
)
from .sphere import SphericalShell, jost_te, jost_tm

__all__ = [
    "DEFAULT_TOLERANCE",
    "TOLERANCE_ENV_VAR",
    "RunConfig",
    "SweepSpec",
    "SweepTable",
    "load_config",
    "run",
    "main",
    "table_to_csv_text",
    "table_to_json_text",
]

TOLERANCE_ENV_VAR = "PLASMASHEET_TOLERANCE"
DEFAULT_TOLERANCE = 1e-8
DEFAULT_COUNT = 50


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis: closed range, point count, and grid spacing."""

    axis: str
    minimum: float
    maximum: float
    count: int = 1
    scale: str = "linear"

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("sweep count must be >= 1")
        if not (math.isfinite(self.minimum) and math.isfinite(self.maximum)):
            raise ValueError("sweep bounds must be finite")
        if self.count > 1 and not self.minimum < self.maximum:
            raise ValueError("sweep needs minimum < maximum for count > 1")
        if self.scale not in ("linear", "log"):
            raise ValueError("scale must be 'linear' or 'log'")
        if self.scale == "log" and self.minimum <= 0.0:
            raise ValueError("log scale needs a positive minimum")

    def values(self):
        if self.count == 1:
            return [float(self.minimum)]
        if self.scale == "log":
            grid = np.geomspace(self.minimum, self.maximum, self.count)
        else:
            grid = np.linspace(self.minimum, self.maximum, self.count)
        return [float(v) for v in grid]


@dataclass(frozen=True)
class SweepTable:
    """Rectangular sweep output: logical columns, rows, and a config echo.

    Cells are floats, complex values, or None for the blanked outputs of a
    failed row; the last column is the error message (empty on success).
    """

    columns: tuple
    kinds: tuple
    rows: tuple
    metadata: dict

    def __post_init__(self):
        if len(self.columns) != len(self.kinds):
            raise ValueError("columns and kinds must align")
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("rows must be rectangular")


@dataclass(frozen=True)
class ParamSpec:
    """One fixed (non-swept) command parameter."""

    name: str
    kind: str  # "float" | "int" | "flag" | "choice"
    default: object
    help: str
    choices: tuple = ()


def _parse_param(spec, text):
    if spec.kind == "float":
        return float(text)
    if spec.kind == "int":
        return int(text)
    if spec.kind == "flag":
        low = text.strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"expected a boolean, got {text!r}")
    if text not in spec.choices:
        raise ValueError(f"expected one of {', '.join(spec.choices)}")
    return text


def _build_reflection(fixed, tolerance):
    sheet = SheetParameters(omega=fixed["omega"])
    k0 = fixed["k0"]

    def runner(kpar):
        k = MinkowskiMomentum.from_parallel(k0, kpar)
        return (reflection_te(k, sheet), reflection_tm(k, sheet))

    return [("rTE", "complex"), ("rTM", "complex")], runner


def _build_dispersion(fixed, tolerance):
    sheet = SheetParameters(omega=fixed["omega"])

    def runner(kpar):
        closed = tm_plasmon_closed(kpar, sheet)
        root = tm_plasmon_root(kpar, sheet)
        return (closed, root, abs(closed - root) / closed)

    return ([("k0_closed", "float"), ("k0_root", "float"),
             ("residual", "float")], runner)


def _build_casimir(fixed, tolerance):
    a = fixed["a"]
    if not a > 0.0:
        raise ValueError("a must be positive")
    raw = fixed["raw_units"]

    def runner(x):
        te, tm = reduced_energy_parts(x, rtol=tolerance)
        total = te + tm
        if total != 0.0:
            shares = (te / total, tm / total)
        else:
            shares = (0.0, 1.0)
        base = (total,) + shares
        if not raw:
            return base
        sheet = SheetParameters(omega=x / a)
        return base + (total / a**3, lifshitz_pressure(a, sheet, rtol=tolerance))

    columns = [("a3_energy", "float"), ("te_share", "float"),
               ("tm_share", "float")]
    if raw:
        columns += [("energy_per_area", "float"), ("pressure", "float")]
    return columns, runner


def _atom_from(fixed):
    if fixed["isotropic_alpha"] is not None:
        return AtomProperties.isotropic(fixed["isotropic_alpha"],
                                        e=fixed["e"], m=fixed["m"])
    return AtomProperties(e=fixed["e"], m=fixed["m"], alpha1=fixed["alpha1"],
                          alpha2=fixed["alpha2"], alpha3=fixed["alpha3"])


def _build_casimir_polder(fixed, tolerance):
    a = fixed["a"]
    if not a > 0.0:
        raise ValueError("a must be positive")
    atom = _atom_from(fixed)
    raw = fixed["raw_units"]

    def runner(x):
        sheet = SheetParameters(omega=x / a)
        value = casimir_polder_energy(a, sheet, atom, rtol=tolerance)
        return (value * a**4, value) if raw else (value * a**4,)

    columns = [("a4_energy", "float")]
    if raw:
        columns.append(("energy", "float"))
    return columns, runner


def _build_charge(fixed, tolerance):
    a = fixed["a"]
    if not a > 0.0:
        raise ValueError("a must be positive")
    atom = AtomProperties(e=fixed["e"], m=fixed["m"], p2par=fixed["p2par"],
                          p23=fixed["p23"])

    def runner(x):
        sheet = SheetParameters(omega=x / a)
        return charge_sheet_energy(a, sheet, atom, rtol=tolerance)

    return [("electrostatic", "float"), ("kinetic", "float")], runner


def _build_sphere(fixed, tolerance):
    l = fixed["l"]
    if l < 1:
        raise ValueError("l must be >= 1")
    radius = fixed["radius"]
    shell = SphericalShell(radius=radius, omega=fixed["omega_r"] / radius)

    def runner(k0r):
        k0 = k0r / radius
        return (jost_te(l, k0, shell), jost_tm(l, k0, shell))

    return [("gTE", "complex"), ("gTM", "complex")], runner


_FAMILY_COLUMNS = {
    "f": ("fTE", "fTM"),
    "h": ("hPar", "h3"),
    "g": ("gTE", "gTM", "g3"),
}


def _build_functions(fixed, tolerance):
    family = fixed["family"]
    if family == "all":
        names = (_FAMILY_COLUMNS["f"] + _FAMILY_COLUMNS["h"]
                 + _FAMILY_COLUMNS["g"])
    else:
        names = _FAMILY_COLUMNS[family]

    def runner(x):
        bundle = reduction_functions(x, rtol=tolerance)
        return tuple(getattr(bundle, name) for name in names)

    return [(name, "float") for name in names], runner


@dataclass(frozen=True)
class CommandSpec:
    axis: str
    help: str
    fixed: tuple
    build: object


COMMANDS = {
    "reflection": CommandSpec(
        axis="kpar",
        help="reflection coefficients rTE, rTM against parallel momentum",
        fixed=(
            ParamSpec("omega", "float", 1.0, "sheet coupling Omega"),
            ParamSpec("k0", "float", 1.0, "frequency held fixed in the sweep"),
        ),
        build=_build_reflection,
    ),
    "dispersion": CommandSpec(
        axis="kpar",
        help="TM surface-plasmon frequency, closed form vs root finder",
        fixed=(
            ParamSpec("omega", "float", 1.0, "sheet coupling Omega"),
        ),
        build=_build_dispersion,
    ),
    "casimir": CommandSpec(
        axis="omega_a",
        help="two-sheet energy a^3 E per area against the coupling Omega a",
        fixed=(
            ParamSpec("a", "float", 1.0, "sheet separation"),
            ParamSpec("raw_units", "flag", False,
                      "add energy-per-area and pressure columns at this a"),
        ),
        build=_build_casimir,
    ),
    "casimir-polder": CommandSpec(
        axis="omega_a",
        help="atom-sheet energy shift a^4 E against the coupling Omega a",
        fixed=(
            ParamSpec("a", "float", 1.0, "atom-sheet distance"),
            ParamSpec("isotropic_alpha", "float", None,
                      "isotropic polarizability (overrides alpha1..alpha3)"),
            ParamSpec("alpha1", "float", 0.0, "in-plane polarizability"),
            ParamSpec("alpha2", "float", 0.0, "in-plane polarizability"),
            ParamSpec("alpha3", "float", 0.0, "normal polarizability"),
            ParamSpec("e", "float", 1.0, "charge"),
            ParamSpec("m", "float", 1.0, "mass"),
            ParamSpec("raw_units", "flag", False,
                      "add the dimensionful energy column at this a"),
        ),
        build=_build_casimir_polder,
    ),
    "charge": CommandSpec(
        axis="omega_a",
        help="charge-sheet energy, electrostatic and kinetic parts",
        fixed=(
            ParamSpec("a", "float", 1.0, "charge-sheet distance"),
            ParamSpec("e", "float", 1.0, "charge"),
            ParamSpec("m", "float", 1.0, "mass"),
            ParamSpec("p2par", "float", 0.0, "in-plane momentum expectation"),
            ParamSpec("p23", "float", 0.0, "normal momentum expectation"),
        ),
        build=_build_charge,
    ),
    "sphere": CommandSpec(
        axis="k0r",
        help="spherical-shell Jost functions gTE, gTM against k0 R",
        fixed=(
            ParamSpec("l", "int", 1, "partial-wave order (>= 1)"),
            ParamSpec("omega_r", "float", 1.0, "shell coupling Omega R"),
            ParamSpec("radius", "float", 1.0, "shell radius"),
        ),
        build=_build_sphere,
    ),
    "functions": CommandSpec(
        axis="x",
        help="reduction functions of the coupling x = Omega a",
        fixed=(
            ParamSpec("family", "choice", "all",
                      "which family to tabulate", ("f", "h", "g", "all")),
        ),
        build=_build_functions,
    ),
}

_COMMON_KEYS = ("count", "scale", "tolerance", "format", "output")


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run: command, sweep, fixed parameters, output options."""

    command: str
    sweep: SweepSpec
    fixed: dict = field(default_factory=dict)
    tolerance: float = DEFAULT_TOLERANCE
    fmt: str = "csv"
    output: str = "-"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if not (math.isfinite(self.tolerance) and self.tolerance > 0.0):
            raise ValueError("tolerance must be a positive number")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be 'csv' or 'json'")
        spec = COMMANDS[self.command]
        if self.sweep.axis != spec.axis:
            raise ValueError(f"{self.command} sweeps {spec.axis!r}, "
                             f"not {self.sweep.axis!r}")
        known = {p.name for p in spec.fixed}
        for name in self.fixed:
            if name not in known:
                raise ValueError(f"unknown parameter {name!r} "
                                 f"for {self.command}")


def _valid_keys(command):
    spec = COMMANDS[command]
    keys = {"command", spec.axis, spec.axis + "_min", spec.axis + "_max"}
    keys.update(_COMMON_KEYS)
    keys.update(p.name for p in spec.fixed)
    return keys


def _read_key_values(path):
    entries = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise ValueError(
                    f"{path}:{lineno}: expected key=value, got {text!r}")
            key, _, value = text.partition("=")
            entries.append((lineno, key.strip().replace("-", "_"),
                            value.strip()))
    return entries


def _assemble(command, file_strings, overrides):
    """RunConfig from typed defaults, file strings, and override values.

    Precedence: overrides (flags) > file values > environment tolerance >
    built-in defaults.
    """
    spec = COMMANDS[command]
    params = {p.name: p for p in spec.fixed}
    axis_parsers = {spec.axis: float, spec.axis + "_min": float,
                    spec.axis + "_max": float, "count": int,
                    "tolerance": float}

    merged = {}
    for key, text in file_strings.items():
        try:
            if key in axis_parsers:
                merged[key] = axis_parsers[key](text)
            elif key == "scale":
                if text not in ("linear", "log"):
                    raise ValueError("expected 'linear' or 'log'")
                merged[key] = text
            elif key == "format":
                if text not in ("csv", "json"):
                    raise ValueError("expected 'csv' or 'json'")
                merged[key] = text
            elif key == "output":
                merged[key] = text
            else:
                merged[key] = _parse_param(params[key], text)
        except ValueError as exc:
            raise ValueError(f"config key {key!r}: {exc}") from None
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value

    tolerance = merged.get("tolerance")
    if tolerance is None:
        env = os.environ.get(TOLERANCE_ENV_VAR)
        if env is not None:
            try:
                tolerance = float(env)
            except ValueError:
                raise ValueError(
                    f"{TOLERANCE_ENV_VAR} must be a number, got {env!r}"
                ) from None
    if tolerance is None:
        tolerance = DEFAULT_TOLERANCE

    axis_flag = "--" + spec.axis.replace("_", "-")
    single = merged.get(spec.axis)
    low = merged.get(spec.axis + "_min")
    high = merged.get(spec.axis + "_max")
    count = merged.get("count")
    scale = merged.get("scale", "linear")
    if single is not None:
        if low is not None or high is not None:
            raise ValueError(f"give either {axis_flag} or {axis_flag}-min/"
                             f"{axis_flag}-max, not both")
        if count is not None and count != 1:
            raise ValueError(f"count must be 1 when {axis_flag} fixes "
                             "a single value")
        sweep = SweepSpec(spec.axis, single, single, 1, "linear")
    else:
        if low is None or high is None:
            raise ValueError(f"missing sweep axis: give {axis_flag}, or both "
                             f"{axis_flag}-min and {axis_flag}-max")
        sweep = SweepSpec(spec.axis, low, high,
                          DEFAULT_COUNT if count is None else count, scale)

    fixed = {}
    for param in spec.fixed:
        value = merged.get(param.name)
        fixed[param.name] = param.default if value is None else value

    return RunConfig(command=command, sweep=sweep, fixed=fixed,
                     tolerance=tolerance, fmt=merged.get("format", "csv"),
                     output=merged.get("output", "-"))


def load_config(path, command=None, overrides=None):
    """RunConfig from a key=value file; override values win over the file.

    The file may set any long option of the command (hyphens or underscores)
    plus 'command' itself; unknown keys and unparseable values are reported
    with the file name, line, and key.
    """
    entries = _read_key_values(path)
    file_command = None
    data = {}
    for lineno, key, value in entries:
        if key == "command":
            file_command = (lineno, value)
        else:
            data[key] = (lineno, value)

    if command is None:
        if file_command is None:
            raise ValueError(f"{path}: config file does not set 'command'")
        command = file_command[1]
    if command not in COMMANDS:
        lineno = file_command[0] if file_command else 0
        raise ValueError(f"{path}:{lineno}: unknown command {command!r}")

    valid = _valid_keys(command)
    for key, (lineno, _) in sorted(data.items(), key=lambda kv: kv[1][0]):
        if key not in valid:
            raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")

    strings = {key: value for key, (_, value) in data.items()}
    return _assemble(command, strings, overrides or {})


def _describe(exc):
    message = str(exc)
    name = type(exc).__name__
    return f"{name}: {message}" if message else name


def _version():
    try:
        return importlib_metadata.version("plasmasheet")
    except importlib_metadata.PackageNotFoundError:
        return "unknown"


def _metadata(config):
    meta = {
        "command": config.command,
        "axis": config.sweep.axis,
        "axis_min": config.sweep.minimum,
        "axis_max": config.sweep.maximum,
        "count": config.sweep.count,
        "scale": config.sweep.scale,
    }
    for name in sorted(config.fixed):
        meta[name] = config.fixed[name]
    meta["tolerance"] = config.tolerance
    meta["format"] = config.fmt
    meta["version"] = _version()
    return meta


def run(config):
    """Evaluate the sweep; returns (SweepTable, exit status).

    Bad fixed parameters raise ValueError before any row is computed; a
    physics error inside one row blanks that row's outputs, records the
    message, and sets the exit status to 1 without stopping the sweep.
    """
    spec = COMMANDS[config.command]
    columns, runner = spec.build(config.fixed, config.tolerance)
    names = (config.sweep.axis,) + tuple(n for n, _ in columns) + ("error",)
    kinds = ("float",) + tuple(k for _, k in columns) + ("error",)

    rows = []
    status = 0
    for value in config.sweep.values():
        try:
            outputs = runner(value)
            rows.append((value,) + tuple(outputs) + ("",))
        except (SheetModelError, ValueError) as exc:
            rows.append((value,) + (None,) * len(columns) + (_describe(exc),))
            status = 1
    table = SweepTable(columns=names, kinds=kinds, rows=tuple(rows),
                       metadata=_metadata(config))
    return table, status


def _format_float(value):
    return "%.17g" % float(value)


def _metadata_text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _format_float(value)
    return str(value)


def table_to_csv_text(table):
    """RFC-4180 CSV with '#'-comment metadata lines above the data section."""
    buffer = io.StringIO()
    for key, value in table.metadata.items():
        buffer.write(f"# {key}: {_metadata_text(value)}\r\n")
    writer = csv.writer(buffer)
    header = []
    for name, kind in zip(table.columns, table.kinds):
        if kind == "complex":
            header += [name + "_re", name + "_im"]
        else:
            header.append(name)
    writer.writerow(header)
    for row in table.rows:
        cells = []
        for kind, cell in zip(table.kinds, row):
            if kind == "error":
                cells.append(cell)
            elif cell is None:
                cells += ["nan", "nan"] if kind == "complex" else ["nan"]
            elif kind == "complex":
                cells += [_format_float(cell.real), _format_float(cell.imag)]
            else:
                cells.append(_format_float(cell))
        writer.writerow(cells)
    return buffer.getvalue()


def table_to_json_text(table):
    """JSON document {metadata, columns, rows}; complex cells as [re, im]."""
    rows = []
    for row in table.rows:
        cells = []
        for kind, cell in zip(table.kinds, row):
            if kind == "error":
                cells.append(cell)
            elif cell is None:
                cells.append(None)
            elif kind == "complex":
                cells.append([cell.real, cell.imag])
            else:
                cells.append(float(cell))
        rows.append(cells)
    document = {"metadata": table.metadata, "columns": list(table.columns),
                "rows": rows}
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="plasmasheet",
        description="Parameter sweeps over the plasma-sheet model: "
                    "reflection, plasmon dispersion, Casimir and "
                    "Casimir-Polder energies, charge-sheet energy, "
                    "spherical-shell Jost functions.",
        epilog=f"The default relative tolerance is {DEFAULT_TOLERANCE:g}; "
               f"the environment variable {TOLERANCE_ENV_VAR} overrides it, "
               "and --tolerance (flag or config file) wins over both.")
    subparsers = parser.add_subparsers(dest="command", required=True,
                                       metavar="command")
    for name, spec in COMMANDS.items():
        sub = subparsers.add_parser(name, help=spec.help,
                                    description=spec.help)
        axis_flag = "--" + spec.axis.replace("_", "-")
        sub.add_argument(axis_flag, dest="axis_single", type=float,
                         default=None, metavar="VALUE",
                         help=f"evaluate at a single {spec.axis} value")
        sub.add_argument(axis_flag + "-min", dest="axis_min", type=float,
                         default=None, metavar="MIN",
                         help="sweep range lower end")
        sub.add_argument(axis_flag + "-max", dest="axis_max", type=float,
                         default=None, metavar="MAX",
                         help="sweep range upper end")
        sub.add_argument("--count", type=int, default=None,
                         help=f"number of sweep points "
                              f"(default {DEFAULT_COUNT})")
        sub.add_argument("--scale", choices=("linear", "log"), default=None,
                         help="grid spacing (default linear)")
        for param in spec.fixed:
            flag = "--" + param.name.replace("_", "-")
            if param.kind == "flag":
                sub.add_argument(flag, dest=param.name, action="store_true",
                                 default=None, help=param.help)
            elif param.kind == "choice":
                sub.add_argument(flag, dest=param.name,
                                 choices=param.choices, default=None,
                                 help=param.help + f" (default "
                                      f"{param.default})")
            elif param.kind == "int":
                sub.add_argument(flag, dest=param.name, type=int,
                                 default=None,
                                 help=param.help + f" (default "
                                      f"{param.default})")
            else:
                sub.add_argument(flag, dest=param.name, type=float,
                                 default=None,
                                 help=param.help + f" (default "
                                      f"{param.default})")
        sub.add_argument("--config", default=None, metavar="PATH",
                         help="key=value file; explicit flags override it")
        sub.add_argument("--tolerance", type=float, default=None,
                         help="relative tolerance for quadratures")
        sub.add_argument("--format", dest="fmt", choices=("csv", "json"),
                         default=None, help="output format (default csv)")
        sub.add_argument("--output", default=None, metavar="PATH",
                         help="output path, or - for stdout (default)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    spec = COMMANDS[args.command]
    overrides = {
        spec.axis: args.axis_single,
        spec.axis + "_min": args.axis_min,
        spec.axis + "_max": args.axis_max,
        "count": args.count,
        "scale": args.scale,
        "tolerance": args.tolerance,
        "format": args.fmt,
        "output": args.output,
    }
    for param in spec.fixed:
        overrides[param.name] = getattr(args, param.name)

    try:
        if args.config is not None:
            config = load_config(args.config, command=args.command,
                                 overrides=overrides)
        else:
            config = _assemble(args.command, {}, overrides)
        table, status = run(config)
        text = (table_to_csv_text(table) if config.fmt == "csv"
                else table_to_json_text(table))
        if config.output == "-":
            sys.stdout.write(text)
        else:
            with open(config.output, "w", encoding="utf-8",
                      newline="") as handle:
                handle.write(text)
    except (ValueError, OSError) as exc:
        print(f"plasmasheet: {exc}", file=sys.stderr)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
