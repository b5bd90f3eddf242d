"""Command line interface.

    jknotcs alpha0 --n 2 --m 1
    jknotcs cs orbifold --n 2 --m 1 --k 3 --format csv
    jknotcs table paper-2 --format md
    jknotcs trace --n 3 --m 1 --branch hyperbolic > path.csv

Every invocation writes one record to stdout (JSON by default).  Exit codes:
0 success, 1 numerical failure, 2 domain error, 64 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import click
import numpy as np

from . import __version__
from ._validation import check_intervals
from .cs import (
    KNOT_INTERVALS,
    ORBIFOLD_INTERVALS,
    OrbifoldSpec,
    cover_from_orbifold,
    cs_knot,
    cs_orbifold,
    lens_cs,
)
from .exceptions import DomainError, NumericalError
from .rmpoly import KnotParams
from .schlafli import continuous_integrands
from .tracker import DEFAULT_STEPS, DEFAULT_TOL, find_alpha0, geometric_component

EXIT_NUMERICAL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

# (n, m) pairs of the reference knot table, in its row order
KNOT_TABLE_PAIRS = [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3), (4, 4)]
# knots and orders of the reference orbifold table (one block per knot)
ORBIFOLD_TABLE_PAIRS = [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3)]
ORBIFOLD_TABLE_ORDERS = list(range(3, 11))

# columns printed with extra digits in csv / md
_LONG_COLUMNS = {"alpha0", "alpha", "re_x", "im_x"}


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: dict
    meta: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls(**json.loads(text))

    def table(self) -> list[dict]:
        """Flat rows for csv / markdown output."""
        if "rows" in self.result:
            return self.result["rows"]
        return [{**self.inputs, **self.result}]


def _fmt(key, value) -> str:
    if isinstance(value, float):
        return f"{value:.16g}" if key in _LONG_COLUMNS else f"{value:.9g}"
    return str(value)


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow([_fmt(k, v) for k, v in row.items()])
    return buf.getvalue()


def render_md(rows: list[dict], group_by: tuple[str, ...] = ()) -> str:
    if group_by:
        blocks: dict[tuple, list[dict]] = {}
        for row in rows:
            blocks.setdefault(tuple(row[g] for g in group_by), []).append(row)
        parts = []
        for key, block in blocks.items():
            title = ", ".join(f"{g}={v}" for g, v in zip(group_by, key))
            parts.append(f"### {title}\n\n{render_md(block)}")
        return "\n".join(parts)
    keys = list(rows[0].keys())
    lines = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    lines += ["| " + " | ".join(_fmt(k, row[k]) for k in keys) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return record.to_json() + "\n"
    rows = record.table()
    if fmt == "csv":
        return render_csv(rows)
    group = ("n", "m") if record.command == "table paper-2" else ()
    return render_md(rows, group)


def write_cache(directory, component) -> None:
    """Write the cached branches of ``component`` as ``alpha,re_x,im_x`` CSVs."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    p = component.params
    named = {"x1": component.spherical[0], "x2": component.spherical[1], "hyperbolic": component.hyperbolic}
    for name, path in named.items():
        with open(out / f"J{2 * p.n}_{2 * p.m}_{name}.csv", "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["alpha", "re_x", "im_x"])
            writer.writerows(path.rows())


# ---------------------------------------------------------------- options


def _meta(ctx_obj, **extra):
    return {"tool": "jknotcs", "version": __version__, **extra}


def _knot_options(f):
    f = click.option("--m", "m", type=int, required=True, help="Half the number of horizontal crossings.")(f)
    f = click.option("--n", "n", type=int, required=True, help="Half the number of vertical crossings.")(f)
    return f


def _numeric_options(default_intervals):
    def deco(f):
        f = click.option("--cache", type=click.Path(file_okay=False), default=None, help="Directory for branch CSVs.")(f)
        f = click.option("--format", "fmt", type=click.Choice(["json", "csv", "md"]), default="json")(f)
        f = click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True, help="alpha0 bracket width.")(f)
        f = click.option("--steps", type=int, default=DEFAULT_STEPS, show_default=True, help="Continuation steps.")(f)
        f = click.option("--sph-intervals", type=int, default=default_intervals, show_default=True)(f)
        f = click.option("--hyp-intervals", type=int, default=default_intervals, show_default=True)(f)
        return f

    return deco


def _check_numeric(hyp_intervals, sph_intervals, steps, tol):
    check_intervals(hyp_intervals, "--hyp-intervals")
    check_intervals(sph_intervals, "--sph-intervals")
    if steps < 1:
        raise DomainError("--steps must be positive")
    if not tol > 0:
        raise DomainError("--tol must be positive")


def _numeric_meta(hyp_intervals, sph_intervals, steps, tol):
    return _meta(None, hyp_intervals=hyp_intervals, sph_intervals=sph_intervals, steps=steps, tol=tol)


def _emit(record, fmt):
    click.echo(render(record, fmt), nl=False)
    return record


def _maybe_cache(cache, params, steps, tol):
    if cache:
        write_cache(cache, geometric_component(params, steps, tol))


# ---------------------------------------------------------------- commands


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="jknotcs")
def cli():
    """Chern-Simons invariants of J(2n, -2m) cone-manifolds, orbifolds and coverings."""


@cli.command("alpha0")
@_knot_options
@click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True, help="Bracket width.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "md"]), default="json")
def alpha0_cmd(n, m, tol, fmt):
    """Euclidean angle where the two spherical real roots collide."""
    params = KnotParams(n, m)
    if not tol > 0:
        raise DomainError("--tol must be positive")
    res = find_alpha0(params, tol)
    record = OutputRecord(
        "alpha0",
        {"n": n, "m": m},
        {"alpha0": res.alpha0, "collision_gap": res.collision_gap, "x0": res.x0},
        _meta(None, tol=tol),
    )
    return _emit(record, fmt)


@cli.group("cs")
def cs_group():
    """Chern-Simons invariants."""


def _mod_result(value):
    return {"value": value.value, "modulus": value.modulus}


@cs_group.command("knot")
@_knot_options
@_numeric_options(KNOT_INTERVALS)
def cs_knot_cmd(n, m, hyp_intervals, sph_intervals, steps, tol, fmt, cache):
    """Complete hyperbolic structure on the knot complement (mod 1/2)."""
    params = KnotParams(n, m)
    _check_numeric(hyp_intervals, sph_intervals, steps, tol)
    val = cs_knot(params, hyp_intervals, sph_intervals, steps, tol)
    _maybe_cache(cache, params, steps, tol)
    record = OutputRecord(
        "cs knot", {"n": n, "m": m}, _mod_result(val), _numeric_meta(hyp_intervals, sph_intervals, steps, tol)
    )
    return _emit(record, fmt)


def _orbifold_common(n, m, k, hyp_intervals, sph_intervals, steps, tol, cache):
    spec = OrbifoldSpec(KnotParams(n, m), k)
    _check_numeric(hyp_intervals, sph_intervals, steps, tol)
    orb = cs_orbifold(spec, hyp_intervals, sph_intervals, steps, tol)
    _maybe_cache(cache, spec.params, steps, tol)
    return spec, orb


@cs_group.command("orbifold")
@_knot_options
@click.option("--k", "k", type=int, required=True, help="Orbifold order (cone angle 2pi/k).")
@_numeric_options(ORBIFOLD_INTERVALS)
def cs_orbifold_cmd(n, m, k, hyp_intervals, sph_intervals, steps, tol, fmt, cache):
    """Orbifold with cone angle 2pi/k (mod 1/k for even k, 1/2k for odd k)."""
    _, orb = _orbifold_common(n, m, k, hyp_intervals, sph_intervals, steps, tol, cache)
    record = OutputRecord(
        "cs orbifold",
        {"n": n, "m": m, "k": k},
        _mod_result(orb),
        _numeric_meta(hyp_intervals, sph_intervals, steps, tol),
    )
    return _emit(record, fmt)


@cs_group.command("cover")
@_knot_options
@click.option("--k", "k", type=int, required=True, help="Covering degree.")
@_numeric_options(ORBIFOLD_INTERVALS)
def cs_cover_cmd(n, m, k, hyp_intervals, sph_intervals, steps, tol, fmt, cache):
    """k-fold cyclic covering (mod 1 for even k, 1/2 for odd k)."""
    spec, orb = _orbifold_common(n, m, k, hyp_intervals, sph_intervals, steps, tol, cache)
    record = OutputRecord(
        "cs cover",
        {"n": n, "m": m, "k": k},
        _mod_result(cover_from_orbifold(spec, orb)),
        _numeric_meta(hyp_intervals, sph_intervals, steps, tol),
    )
    return _emit(record, fmt)


@cs_group.command("lens")
@_knot_options
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "md"]), default="json")
def cs_lens_cmd(n, m, fmt):
    """Lens space at cone angle pi (exact rational, mod 1)."""
    params = KnotParams(n, m)
    val = lens_cs(params)
    record = OutputRecord("cs lens", {"n": n, "m": m}, _mod_result(val), _meta(None))
    return _emit(record, fmt)


@cli.group("table")
def table_group():
    """Reproduce the reference tables."""


@table_group.command("paper-1")
@_numeric_options(KNOT_INTERVALS)
def table1_cmd(hyp_intervals, sph_intervals, steps, tol, fmt, cache):
    """alpha0 and knot cs for 1 <= m <= n <= 4 (10 rows)."""
    _check_numeric(hyp_intervals, sph_intervals, steps, tol)
    rows = []
    for n, m in KNOT_TABLE_PAIRS:
        params = KnotParams(n, m)
        val = cs_knot(params, hyp_intervals, sph_intervals, steps, tol)
        a0 = geometric_component(params, steps, tol).alpha0.alpha0
        _maybe_cache(cache, params, steps, tol)
        rows.append({"two_n": 2 * n, "two_m": 2 * m, "alpha0": a0, "cs": val.value})
    record = OutputRecord("table paper-1", {}, {"rows": rows}, _numeric_meta(hyp_intervals, sph_intervals, steps, tol))
    return _emit(record, fmt)


@table_group.command("paper-2")
@_numeric_options(ORBIFOLD_INTERVALS)
def table2_cmd(hyp_intervals, sph_intervals, steps, tol, fmt, cache):
    """Orbifold and covering cs, 6 knots x k = 3..10 (48 rows)."""
    _check_numeric(hyp_intervals, sph_intervals, steps, tol)
    rows = []
    for n, m in ORBIFOLD_TABLE_PAIRS:
        for k in ORBIFOLD_TABLE_ORDERS:
            spec, orb = _orbifold_common(n, m, k, hyp_intervals, sph_intervals, steps, tol, cache)
            cov = cover_from_orbifold(spec, orb)
            rows.append({"n": n, "m": m, "k": k, "cs_orbifold": orb.value, "cs_cover": cov.value})
    record = OutputRecord("table paper-2", {}, {"rows": rows}, _numeric_meta(hyp_intervals, sph_intervals, steps, tol))
    return _emit(record, fmt)


@cli.command("trace")
@_knot_options
@click.option(
    "--branch",
    type=click.Choice(["hyperbolic", "x1", "x2"]),
    default="hyperbolic",
    show_default=True,
    help="Which cached branch to dump.",
)
@click.option("--steps", type=int, default=DEFAULT_STEPS, show_default=True, help="Continuation steps.")
@click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True, help="alpha0 bracket width.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "md"]), default="csv", show_default=True)
@click.option("--cache", type=click.Path(file_okay=False), default=None, help="Directory for branch CSVs.")
def trace_cmd(n, m, branch, steps, tol, fmt, cache):
    """Dump a tracked branch as alpha, re_x, im_x, beta (continuous integrand)."""
    params = KnotParams(n, m)
    if steps < 1 or not tol > 0:
        raise DomainError("--steps and --tol must be positive")
    comp = geometric_component(params, steps, tol)
    if branch == "hyperbolic":
        path = comp.hyperbolic
        beta, _ = continuous_integrands(comp, path.alphas, np.empty(0))
    else:
        path = comp.spherical[0 if branch == "x1" else 1]
        _, beta = continuous_integrands(comp, np.empty(0), path.alphas)
    _maybe_cache(cache, params, steps, tol)
    rows = [
        {"alpha": a, "re_x": re, "im_x": im, "beta": float(b)} for (a, re, im), b in zip(path.rows(), beta)
    ]
    record = OutputRecord(
        "trace", {"n": n, "m": m, "branch": branch}, {"rows": rows}, _meta(None, steps=steps, tol=tol)
    )
    return _emit(record, fmt)


# ---------------------------------------------------------------- entry points


def run(argv=None) -> int:
    """Run the CLI on ``argv`` and return the process exit code."""
    try:
        rv = cli.main(args=argv, prog_name="jknotcs", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        return EXIT_DOMAIN
    except NumericalError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        return EXIT_NUMERICAL
    # --help / --version return their exit code instead of a record
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
