"""Command-line interface.

Exit codes: 0 success, 1 bad arguments, 2 verification or table mismatch,
3 I/O failure, 4 malformed input data.
"""

import argparse
import csv
import io
import json
import math
import sys
import warnings

import numpy as np

from . import table2
from .errors import ConditioningError, ConvergenceError, DomainError
from .nodal import (
    interpolate,
    nod_coefficients,
    nod_function_eval,
    sinc_distance_closed_form,
)
from .systems import Family, GeneratorSpec, nod_riesz_constants, riesz_constants
from .verification import build_report, run_checks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_IO = 3
EXIT_DATA = 4

COMMANDS = ("riesz", "nod-coeffs", "eval", "interpolate", "verify", "table2", "sinc-distance")


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"{self.prog}: {message}", EXIT_USAGE)


# -- argument parsing -------------------------------------------------------

def _sigma_list(text):
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")
    for v in values:
        if not (math.isfinite(v) and v > 0):
            raise argparse.ArgumentTypeError(f"sigma must be positive and finite, got {v!r}")
    return values


def _grid(text):
    parts = text.split(":")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
        if len(parts) != 3:
            raise ValueError
    except (ValueError, IndexError):
        raise argparse.ArgumentTypeError(f"grid must look like start:stop:steps, got {text!r}")
    if not (math.isfinite(start) and math.isfinite(stop)) or steps < 1:
        raise argparse.ArgumentTypeError("grid needs finite bounds and steps >= 1")
    return start, stop, steps


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"must be positive, got {value!r}")
    return value


_DEFAULT_SIGMAS = {
    "riesz": ",".join(f"{s:g}" for s in table2.SIGMAS),
    "table2": ",".join(f"{s:g}" for s in table2.SIGMAS),
    "sinc-distance": "0.5,1,2,5",
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--family", choices=("gauss", "lorentz", "both"), default="both")
    common.add_argument("--kmax", type=_positive_int, default=40)
    common.add_argument("--grid", type=_grid, default=(-5.0, 5.0, 11),
                        help="start:stop:steps, inclusive (default -5:5:11)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--tol", type=_positive_float,
                        help="coefficient tolerance (quadrature for lorentz, tail for gauss)")

    parser = _Parser(prog="rieszshift", description="Riesz constants and nod functions "
                     "of Gaussian and Cauchy-Lorentz shift systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--sigma", type=_sigma_list, default=_sigma_list(_DEFAULT_SIGMAS.get(name, "1")))
        if name == "riesz":
            p.add_argument("--nodal", action="store_true", help="bounds of the nod-function system")
        if name == "interpolate":
            p.add_argument("--samples", required=True, help='CSV file with columns "n,f"')
        if name == "table2":
            p.add_argument("--errata", action="store_true",
                           help="compare within one printed digit, with known misprints corrected")
    return parser


# -- output -----------------------------------------------------------------

def _csv_cell(value):
    if isinstance(value, float):
        return f"{value:.5e}" if math.isfinite(value) else str(value)
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render(columns, rows, fmt, command):
    """Render rows as CSV (6 significant digits) or JSON (full precision)."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue()
    records = [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows]
    return json.dumps({"command": command, "rows": records}, indent=2) + "\n"


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc.strerror}", EXIT_IO)


def _families(config):
    return list(Family) if config.family == "both" else [Family(config.family)]


def _grid_points(grid):
    start, stop, steps = grid
    return np.linspace(start, stop, steps) if steps > 1 else np.array([start])


def _coefficients(family, sigma, config):
    return nod_coefficients(GeneratorSpec(family, sigma), config.kmax, config.tol)


# -- commands ---------------------------------------------------------------

def cmd_riesz(config):
    rows = []
    for family in _families(config):
        for sigma in config.sigma:
            spec = GeneratorSpec(family, sigma)
            b = nod_riesz_constants(spec) if config.nodal else riesz_constants(spec)
            rows.append((family.value, float(sigma), b.lower, b.upper, b.ratio))
    _emit(render(("family", "sigma", "lower", "upper", "ratio"), rows, config.format, "riesz"),
          config.out)
    return EXIT_OK


def cmd_nod_coeffs(config):
    rows = []
    for family in _families(config):
        for sigma in config.sigma:
            coeffs = _coefficients(family, sigma, config)
            for k, d in zip(coeffs.indices, coeffs.values):
                rows.append((family.value, float(sigma), int(k), float(d)))
    _emit(render(("family", "sigma", "k", "d"), rows, config.format, "nod-coeffs"), config.out)
    return EXIT_OK


def cmd_eval(config):
    t = _grid_points(config.grid)
    rows = []
    for family in _families(config):
        for sigma in config.sigma:
            values = nod_function_eval(_coefficients(family, sigma, config), t)
            rows.extend((family.value, float(sigma), float(x), float(v)) for x, v in zip(t, values))
    _emit(render(("family", "sigma", "t", "value"), rows, config.format, "eval"), config.out)
    return EXIT_OK


def read_samples(path):
    """Parse a two-column ``n,f`` CSV; raises CliError with the offending line."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            lines = list(csv.reader(fh))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO)
    except (UnicodeDecodeError, csv.Error) as exc:
        raise CliError(f"{path}: unreadable CSV ({exc})", EXIT_DATA)
    samples = {}
    for lineno, fields in enumerate(lines, start=1):
        if not fields or all(not f.strip() for f in fields):
            continue
        cells = [f.strip() for f in fields]
        if lineno == 1 and [c.lower() for c in cells] == ["n", "f"]:
            continue
        if len(cells) != 2:
            raise CliError(f"{path}:{lineno}: expected 2 columns, got {len(cells)}", EXIT_DATA)
        try:
            n = int(cells[0])
            f = float(cells[1])
        except ValueError:
            raise CliError(f"{path}:{lineno}: expected integer n and real f, got {cells}", EXIT_DATA)
        if not math.isfinite(f):
            raise CliError(f"{path}:{lineno}: f must be finite", EXIT_DATA)
        if n in samples:
            raise CliError(f"{path}:{lineno}: duplicate node n={n}", EXIT_DATA)
        samples[n] = f
    if not samples:
        raise CliError(f"{path}: no samples", EXIT_DATA)
    return samples


def cmd_interpolate(config):
    samples = read_samples(config.samples)
    t = _grid_points(config.grid)
    rows = []
    for family in _families(config):
        for sigma in config.sigma:
            values = np.atleast_1d(interpolate(_coefficients(family, sigma, config), samples, t))
            rows.extend((family.value, float(sigma), float(x), float(v)) for x, v in zip(t, values))
    _emit(render(("family", "sigma", "t", "value"), rows, config.format, "interpolate"), config.out)
    return EXIT_OK


def cmd_sinc_distance(config):
    rows = [(float(s), sinc_distance_closed_form(s)) for s in config.sigma]
    _emit(render(("sigma", "distance_sq"), rows, config.format, "sinc-distance"), config.out)
    return EXIT_OK


def cmd_table2(config):
    rows = table2.compute_table(config.sigma)
    _emit(render(("sigma",) + table2.COLUMNS, rows, config.format, "table2"), config.out)
    checks = table2.compare(rows, mode="tolerant" if config.errata else "strict")
    bad = [c for c in checks if not c.ok]
    for c in bad:
        sys.stderr.write(f"mismatch sigma={c.sigma:g} {c.column}: computed {c.computed:.5e}, "
                         f"published {c.published}\n")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_verify(config):
    report = build_report(run_checks())
    if config.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        rows = [(c["name"], c["residual"] if c["residual"] is not None else math.nan,
                 c["tolerance"], "pass" if c["pass"] else "FAIL") for c in report["checks"]]
        text = render(("name", "residual", "tolerance", "pass"), rows, "csv", "verify")
    _emit(text, config.out)
    for c in report["checks"]:
        if not c["pass"]:
            sys.stderr.write(f"FAILED {c['name']}: residual {c['residual']} > {c['tolerance']}\n")
    return EXIT_MISMATCH if report["summary"]["failed"] else EXIT_OK


_HANDLERS = {
    "riesz": cmd_riesz,
    "nod-coeffs": cmd_nod_coeffs,
    "eval": cmd_eval,
    "interpolate": cmd_interpolate,
    "verify": cmd_verify,
    "table2": cmd_table2,
    "sinc-distance": cmd_sinc_distance,
}


def _join_grid(argv):
    # argparse would read "--grid -3:3:13" as a missing value followed by an option
    out, it = [], iter(argv)
    for token in it:
        if token == "--grid":
            token = "--grid=" + next(it, "")
        out.append(token)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = build_parser().parse_args(_join_grid(argv))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = _HANDLERS[config.command](config)
        for w in caught:
            sys.stderr.write(f"warning: {w.message}\n")
        return code
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except (DomainError, ConditioningError, ConvergenceError) as exc:
        # parameters that parse but lie outside what the numerics support
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
