"""Command-line interface.

Usage:
    bellsv bound matrix.csv            # full sandwich certification
    bellsv classical matrix.csv        # exact local-realistic bound
    bellsv tight matrix.csv            # alpha certificate + ellipsoid
    bellsv directions matrix.csv       # optimal measurement directions
    bellsv realize matrix.csv          # explicit state and observables
    bellsv seesaw matrix.csv --dim 3   # see-saw lower bound at fixed d'
    bellsv witness matrix.csv --dmax 4 --observed 15.5
    bellsv rotate-scan --samples 361 --output csv

Matrices are headerless CSV (one row per Alice setting) or JSON
{"rows": [[...], ...]}; "-" reads standard input.  Reports go to standard
output as JSON (schema_version 1), errors to standard error.

Exit codes: 0 success, 1 validation error, 2 numerical failure,
3 no alpha certificate found (tightness not certified).
"""

from __future__ import annotations

import functools
import json
import math
import sys

import click
import numpy as np

from . import __version__
from .core import classical_bound, load_matrix
from .errors import (
    NoAlphaSolutionError,
    NumericalError,
    ValidationError,
)
from .rotation import curve_to_csv, curve_to_jsonable, violation_curve
from .seesaw import (
    SeesawConfig,
    certify,
    classify_dimension,
    seesaw_bound,
    witness_thresholds,
)
from .strategies import (
    directions_from_alpha,
    realization_to_jsonable,
    realize,
    strategy_value,
)
from .svd import compute_svd, truncate_max
from .tightness import (
    INFINITE,
    alpha_certificate,
    build_constraint_rows,
    ellipsoid_semiaxes,
    solve_alpha_gram,
)

SCHEMA_VERSION = 1


def _round15(obj):
    """Round all floats to 15 significant digits for stable serialization."""
    if isinstance(obj, float):
        if math.isinf(obj):
            return "INFINITE"
        return float(f"{obj:.15g}")
    if isinstance(obj, dict):
        return {k: _round15(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round15(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _round15(obj.tolist())
    if isinstance(obj, (np.floating,)):
        return _round15(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj


def _emit(command: str, payload: dict):
    report = {"schema_version": SCHEMA_VERSION, "command": command}
    report.update(payload)
    click.echo(json.dumps(_round15(report), indent=2))


def _read_matrix(input_path: str, fmt: str):
    if input_path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(input_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {input_path}: {exc}") from exc
    return load_matrix(text, fmt)


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NoAlphaSolutionError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except NumericalError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _matrix_argument(fn):
    fn = click.argument("input_path", metavar="INPUT")(fn)
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["auto", "csv", "json"]),
        default="auto",
        show_default=True,
        help="Matrix input format.",
    )(fn)


def _seesaw_options(fn):
    fn = click.option("--seed", type=int, default=42, show_default=True)(fn)
    return click.option("--restarts", type=int, default=32, show_default=True)(fn)


def _alpha_payload(sol) -> dict:
    return {
        "x_matrix": sol.x_matrix,
        "alpha": sol.alpha,
        "rank_dprime": sol.rank_dprime,
        "residual": sol.residual,
    }


@click.group()
@click.version_option(__version__)
def cli():
    """Singular-value Tsirelson bounds for CHSH-type Bell inequalities."""


@cli.command()
@_matrix_argument
@_seesaw_options
@_handle_errors
def bound(input_path, fmt, seed, restarts):
    """Classical bound, SV bound, see-saw lower bound and tightness."""
    g = _read_matrix(input_path, fmt)
    report = certify(g, SeesawConfig(restarts=restarts, seed=seed))
    payload = {
        "m1": g.m1,
        "m2": g.m2,
        "classical": report.classical,
        "sv_bound": report.sv_bound,
        "seesaw_lower": report.seesaw_lower,
        "seesaw_dim": report.seesaw_dim,
        "gap": report.gap,
        "tight": report.tight_certified,
    }
    if report.alpha is not None:
        payload["alpha_certificate"] = _alpha_payload(report.alpha)
    _emit("bound", payload)


@cli.command()
@_matrix_argument
@_handle_errors
def classical(input_path, fmt):
    """Exact local-realistic bound with a maximizing assignment."""
    g = _read_matrix(input_path, fmt)
    value, assignment = classical_bound(g)
    _emit(
        "classical",
        {
            "m1": g.m1,
            "m2": g.m2,
            "classical": value,
            "a": assignment.a.tolist(),
            "b": assignment.b.tolist(),
        },
    )


@cli.command()
@_matrix_argument
@click.option(
    "--tol",
    type=float,
    default=1e-6,
    show_default=True,
    help="Residual tolerance of the alpha system.",
)
@_handle_errors
def tight(input_path, fmt, tol):
    """Alpha certificate for attainability of the SV bound (exit 3 if none)."""
    g = _read_matrix(input_path, fmt)
    trunc, sol = alpha_certificate(g, residual_tol=tol)
    axes = ellipsoid_semiaxes(sol)
    _emit(
        "tight",
        {
            "tight": True,
            "s_max": trunc.s_max,
            "degeneracy_d": trunc.degeneracy_d,
            "alpha_certificate": _alpha_payload(sol),
            "semi_axes": list(axes.semi_axes),
        },
    )


@cli.command()
@_matrix_argument
@_handle_errors
def directions(input_path, fmt):
    """Optimal measurement directions from the alpha certificate."""
    g = _read_matrix(input_path, fmt)
    trunc, sol = alpha_certificate(g)
    strat = directions_from_alpha(trunc, sol, g.m1, g.m2)
    _emit(
        "directions",
        {
            "dprime": strat.dprime,
            "v": strat.v,
            "w": strat.w,
            "value": strategy_value(g, strat),
        },
    )


@cli.command("realize")
@_matrix_argument
@_handle_errors
def realize_cmd(input_path, fmt):
    """Explicit quantum realization: state, observables, expectation table."""
    g = _read_matrix(input_path, fmt)
    trunc, sol = alpha_certificate(g)
    strat = directions_from_alpha(trunc, sol, g.m1, g.m2)
    realization = realize(strat)
    payload = realization_to_jsonable(realization)
    payload["bell_value"] = float(
        np.sum(g.entries * realization.expected.values)
    )
    _emit("realize", payload)


@cli.command()
@_matrix_argument
@_seesaw_options
@click.option("--dim", type=int, default=None, help="Direction dimension d' [default: m1+m2].")
@_handle_errors
def seesaw(input_path, fmt, seed, restarts, dim):
    """See-saw lower bound at fixed direction dimension."""
    g = _read_matrix(input_path, fmt)
    if dim is None:
        dim = g.m1 + g.m2
    value, strat = seesaw_bound(g, dim, SeesawConfig(restarts=restarts, seed=seed))
    _emit(
        "seesaw",
        {"dim": dim, "value": value, "v": strat.v, "w": strat.w},
    )


@cli.command()
@_matrix_argument
@_seesaw_options
@click.option("--dmax", type=int, default=4, show_default=True)
@click.option("--observed", type=float, default=None, help="Observed Bell value to classify.")
@_handle_errors
def witness(input_path, fmt, seed, restarts, dmax, observed):
    """Dimension-witness thresholds T_d' and optional classification."""
    g = _read_matrix(input_path, fmt)
    t = witness_thresholds(g, dmax, SeesawConfig(restarts=restarts, seed=seed))
    payload = {
        "dmax": dmax,
        "thresholds": {str(d): v for d, v in sorted(t.thresholds.items())},
        "sv_bound": t.sv_bound,
    }
    if observed is not None:
        d = classify_dimension(observed, t)
        payload["observed"] = observed
        payload["min_dimension"] = d
        payload["exceeds_modeled_dimensions"] = d > dmax
    _emit("witness", payload)


@cli.command("rotate-scan")
@_seesaw_options
@click.option("--phi-min", type=float, default=0.0, show_default=True)
@click.option("--phi-max", type=float, default=2 * math.pi, show_default="2*pi")
@click.option("--samples", type=int, default=361, show_default=True)
@click.option(
    "--output",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@_handle_errors
def rotate_scan(seed, restarts, phi_min, phi_max, samples, output):
    """Scan the frame-rotated extended CHSH inequality over a phi grid."""
    if samples < 1:
        raise ValidationError("samples must be >= 1")
    grid = np.linspace(phi_min, phi_max, samples)
    curve = violation_curve(grid, SeesawConfig(restarts=restarts, seed=seed))
    if output == "csv":
        click.echo(curve_to_csv(curve), nl=False)
    else:
        _emit("rotate-scan", {"samples": curve_to_jsonable(curve)})


if __name__ == "__main__":
    cli()
