"""Command-line front end.

Exit status is 0 when every check in scope passes, 1 when any check fails and
2 for an invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from . import __version__
from ._report import Report
from .geometry import DEFAULT_SEED, metric_decomposition_residual, random_samples
from .micz import TEST_FUNCTIONS, conjugation_residual, sector_correspondence, spectrum_correspondence
from .oscillator import oscillator_residual, shell_eigenvalue_check, twist
from .radial import radial_eigenfunction, radial_operator_residual
from .repcore import HighestWeight, ProblemParams, dim_highest_weight, verify_dimension_equality, verify_generating_function
from .spectra import oscillator_shell_check, spectrum_table, verify_ktype_dimensions
from .suites import SUITES, TOLERANCES, run_suite, tolerances

COMMANDS = ("spectrum", "ktypes", "verify", "radial", "oscillator", "micz-check", "geometry-check")


class ConfigError(ValueError):
    pass


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="u1kepler", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", dest="output_path", default=None, help="write the report here instead of stdout")

    physics = argparse.ArgumentParser(add_help=False)
    physics.add_argument("--n", type=int, default=2, help="dimension parameter, n >= 2")
    physics.add_argument("--sigma", dest="sigma_bar", type=int, default=0, help="infinitesimal character sigma_bar")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, physics], help="energies, degeneracies and K-types")
    p.add_argument("--levels", type=_nonnegative, default=5, help="number of levels I = 0..levels-1")

    p = sub.add_parser("ktypes", parents=[common, physics], help="K-type ledger with dimension check")
    p.add_argument("--levels", type=_nonnegative, default=5)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "shell-eigenvalue", "all"), default="all")
    p.add_argument("--n", type=int, default=None, help="restrict a parametrized suite to one n")
    p.add_argument("--sigma", dest="sigma_bar", type=int, default=0)
    p.add_argument("--kmax", type=_nonnegative, default=30)
    p.add_argument("--levels", type=_nonnegative, default=11)
    p.add_argument("--seed", type=_nonnegative, default=DEFAULT_SEED)
    for key in TOLERANCES:
        p.add_argument(f"--tol-{key}", type=_positive_float, default=None, help=f"tolerance override for {key}")

    for name, var in (("radial", "rho"), ("oscillator", "r")):
        p = sub.add_parser(name, parents=[common, physics], help=f"sample the {name} profile as ({var}, value)")
        p.add_argument("--k", type=int, default=1, help="radial quantum number, k >= 1")
        p.add_argument("--l", type=_nonnegative, default=0)
        p.add_argument("--points", type=_nonnegative, default=101)
        p.add_argument("--min", dest="x_min", type=float, default=None)
        p.add_argument("--max", dest="x_max", type=float, default=None)
        p.add_argument("--tol", type=_positive_float, default=None)

    p = sub.add_parser("micz-check", parents=[common], help="n = 2 equivalence with the MICZ-Kepler problem")
    p.add_argument("--sigma", dest="sigma_bar", type=int, default=0)
    p.add_argument("--levels", type=_nonnegative, default=11)
    p.add_argument("--lmax", type=_nonnegative, default=2)
    p.add_argument("--tol", type=_positive_float, default=None)

    p = sub.add_parser("geometry-check", parents=[common], help="randomized metric decomposition check")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--samples", type=_nonnegative, default=1000)
    p.add_argument("--seed", type=_nonnegative, default=DEFAULT_SEED)
    p.add_argument("--tol", type=_positive_float, default=None)
    return parser


# --- rendering ---------------------------------------------------------------


def _flatten(row: dict[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, Fraction):
            out[f"{key}_exact"] = str(value)
            out[f"{key}_float"] = float(value)
        elif isinstance(value, HighestWeight):
            out[key] = str(value)
        elif isinstance(value, tuple) and value and all(isinstance(x, Fraction) for x in value):
            out[key] = "[" + " ".join(str(x) for x in value) + "]"
        elif isinstance(value, (list, tuple)):
            out[key] = [_plain(x) for x in value]
        else:
            out[key] = _plain(value)
    return out


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple) and value and all(isinstance(x, Fraction) for x in value):
        return "[" + " ".join(str(x) for x in value) + "]"
    if isinstance(value, (list, tuple)):
        return [_plain(x) for x in value]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def render(report: Report, params: dict[str, Any], fmt: str) -> str:
    rows = [_flatten(r) for r in report.rows]
    if fmt == "json":
        payload = {
            "params": {k: _plain(v) for k, v in params.items()},
            "results": rows,
            "failures": [_flatten(r) for r in report.failures],
            "version": __version__,
        }
        return json.dumps(payload, indent=2) + "\n"
    columns: list[str] = []
    for row in rows:
        columns.extend(c for c in row if c not in columns)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        return buf.getvalue()
    lines = [f"# {report.name}: " + ("PASS" if report.passed else f"FAIL ({len(report.failures)} failures)")]
    lines.append("  ".join(columns))
    for row in rows:
        lines.append("  ".join(str(_csv_cell(row.get(c, ""))) for c in columns))
    return "\n".join(lines) + "\n"


def _csv_cell(value: Any) -> Any:
    if isinstance(value, list):
        return " ".join(str(x) for x in value)
    if isinstance(value, float):
        return repr(value)
    return value


# --- commands ----------------------------------------------------------------


def _params(args) -> ProblemParams:
    try:
        return ProblemParams(args.n, args.sigma_bar)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_spectrum(args) -> tuple[Report, dict]:
    params = _params(args)
    table = spectrum_table(params, args.levels - 1)
    report = Report("spectrum")
    for level in table.levels:
        report.rows.append(
            {
                "I": level.I,
                "energy": level.energy,
                "degeneracy": level.degeneracy,
                "left_ktype": level.left_ktype,
                "right_ktype": level.right_ktype,
            }
        )
    return report, {"n": params.n, "sigma_bar": params.sigma_bar, "levels": args.levels, "hw_label": table.hw_label}


def cmd_ktypes(args) -> tuple[Report, dict]:
    params = _params(args)
    checked = verify_ktype_dimensions(params, max(args.levels - 1, 0)) if args.levels else Report("ktype-dimensions")
    table = spectrum_table(params, args.levels - 1)
    report = Report("ktypes")
    for level, row in zip(table.levels, checked.rows):
        report.add(
            row["ok"],
            I=level.I,
            left_ktype=level.left_ktype,
            right_ktype=level.right_ktype,
            dim_left=dim_highest_weight(level.left_ktype),
            dim_right=dim_highest_weight(level.right_ktype),
            degeneracy=level.degeneracy,
            kappa=row["kappa"],
        )
    return report, {"n": params.n, "sigma_bar": params.sigma_bar, "levels": args.levels, "hw_label": table.hw_label}


def cmd_verify(args) -> tuple[Report, dict]:
    overrides = {key: getattr(args, f"tol_{key}") for key in TOLERANCES}
    try:
        tol = tolerances(overrides)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    params: dict[str, Any] = {"suite": args.suite, "seed": args.seed, "tolerances": tol}
    if args.n is not None:
        if args.n < 2:
            raise ConfigError(f"n must satisfy n >= 2, got n={args.n}")
        params.update(n=args.n, kmax=args.kmax)
        single = {
            "dimension-equality": lambda: verify_dimension_equality(args.n, args.kmax),
            "generating-function": lambda: verify_generating_function(args.n, args.kmax),
            "shell-eigenvalue": lambda: shell_eigenvalue_check(args.n, args.kmax),
            "ktype-dimensions": lambda: verify_ktype_dimensions(_params(args), args.levels),
        }
        if args.suite == "oscillator-shell":
            report = Report("oscillator-shell")
            for k in range(args.kmax + 1):
                report.extend(oscillator_shell_check(args.n, k))
            return report, params
        if args.suite in single:
            return single[args.suite](), params
        raise ConfigError(f"suite {args.suite!r} does not take --n")
    if args.suite == "shell-eigenvalue":
        raise ConfigError("suite 'shell-eigenvalue' needs --n")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = Report(args.suite)
    for name in names:
        sub = run_suite(name, tol, seed=args.seed)
        report.add(sub.passed, suite=name, checks=len(sub.rows), failures=len(sub.failures))
        report.failures.extend({"suite": name, **f} for f in sub.failures)
    return report, params


def _sample_range(args, default: tuple[float, float]) -> np.ndarray:
    lo = default[0] if args.x_min is None else args.x_min
    hi = default[1] if args.x_max is None else args.x_max
    if not 0 <= lo < hi or args.points < 2:
        raise ConfigError(f"need 0 <= min < max and at least 2 points, got [{lo}, {hi}] with {args.points}")
    return np.linspace(lo, hi, args.points)


def cmd_profile(args) -> tuple[Report, dict]:
    params = _params(args)
    if args.k < 1:
        raise ConfigError(f"k must satisfy k >= 1, got k={args.k}")
    f = radial_eigenfunction(args.k, args.l, params)
    meta: dict[str, Any] = {"n": params.n, "sigma_bar": params.sigma_bar, "k": args.k, "l": args.l}
    if args.command == "radial":
        scale = float(f.n_I) ** 0.5
        xs = _sample_range(args, (0.0, 4.0 * scale))
        values = f(xs)
        residual = radial_operator_residual(f)
        tol = args.tol or tolerances()["radial"]
        var = "rho"
        meta.update(energy=f.energy, norm_const=f.norm_const)
    else:
        profile = twist(f)
        xs = _sample_range(args, (0.0, 5.0))
        values = profile(xs)
        residual = oscillator_residual(profile)
        tol = args.tol or tolerances()["oscillator"]
        var = "r"
        meta.update(eigenvalue=profile.eigenvalue, Lambda=profile.Lambda, c_I=profile.c_I)
    meta.update(residual=residual, tolerance=tol)
    report = Report(args.command)
    for x, v in zip(xs, np.atleast_1d(values)):
        report.rows.append({var: float(x), "value": float(v)})
    if not residual < tol:
        report.failures.append({"check": "residual", "residual": residual, "tolerance": tol})
    return report, meta


def cmd_micz(args) -> tuple[Report, dict]:
    tol = args.tol or tolerances()["micz"]
    report = Report("micz-check")
    for l in range(args.lmax + 1):
        micz, ok = sector_correspondence(l, args.sigma_bar)
        report.add(ok, check="sector", l=l, mu=micz.mu, j=micz.j, micz_angular=micz.angular_eigenvalue)
    report.extend(spectrum_correspondence(args.sigma_bar, max(args.levels - 1, 0)))
    for name, fn in TEST_FUNCTIONS.items():
        for l in range(args.lmax + 1):
            res = conjugation_residual(fn, l, args.sigma_bar)
            report.add(res < tol, check="conjugation", test_fn=name, l=l, residual=res)
    return report, {"n": 2, "sigma_bar": args.sigma_bar, "levels": args.levels, "tolerance": tol}


def cmd_geometry(args) -> tuple[Report, dict]:
    if args.n < 1:
        raise ConfigError(f"n must be positive, got n={args.n}")
    tol = args.tol or tolerances()["geometry"]
    residuals = [metric_decomposition_residual(s) for s in random_samples(args.n, args.samples, args.seed)]
    worst = max(residuals, default=0.0)
    report = Report("geometry-check")
    report.add(worst < tol, n=args.n, samples=args.samples, seed=args.seed, max_residual=worst)
    return report, {"n": args.n, "samples": args.samples, "seed": args.seed, "tolerance": tol}


HANDLERS = {
    "spectrum": cmd_spectrum,
    "ktypes": cmd_ktypes,
    "verify": cmd_verify,
    "radial": cmd_profile,
    "oscillator": cmd_profile,
    "micz-check": cmd_micz,
    "geometry-check": cmd_geometry,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, params = HANDLERS[args.command](args)
    except ConfigError as exc:
        print(f"u1kepler {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(report, params, args.format)
    if args.output_path:
        with open(args.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not report.passed:
        if args.format != "json":
            for failure in report.failures:
                print(f"FAILED: {_flatten(failure)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
