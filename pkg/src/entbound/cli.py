"""Command-line front end.

Subcommands:
  entbound bounds  --graph g.json --measurements m.json [--json]
  entbound sweep   --spec s.json --out rows.csv
  entbound figures --out-dir d/ [--no-plots]
  entbound oracle  --seed S --n-max K

Exit codes: 0 ok, 1 input error, 2 graph not two-colorable, 3 oracle failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__, bounds, figures, io, oracle
from .graphs import NotTwoColorable, two_color


@click.group()
@click.version_option(__version__, prog_name="entbound")
def cli():
    """Certified entanglement bounds for two-colorable graph states."""


@cli.command("bounds")
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--measurements", "meas_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
def cmd_bounds(graph_path, meas_path, as_json):
    """Report entanglement bounds for one graph + measurement record."""
    g = io.load_graph(graph_path)
    rec = io.load_measurements(meas_path, g.n)
    col = two_color(g)
    rep = bounds.report(rec, col)
    if as_json:
        click.echo(json.dumps({"n": g.n, **rep.as_dict()}, indent=2))
        return 0
    click.echo(f"n={g.n}  |A|={col.amber_count}  |B|={col.blue_count}")
    for name, value in rep.as_dict().items():
        if name == "blue_count":
            continue
        click.echo(f"{name:<16} {value:.6f}")
    return 0


@cli.command("sweep")
@click.option("--spec", "spec_path", required=True, type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path())
def cmd_sweep(spec_path, out_path):
    """Dephasing sweep over (size, gamma_t); one CSV row per grid point."""
    spec = io.load_sweep_spec(spec_path)
    comment = (
        f"entbound {__version__} sweep family={spec.family} "
        f"sizes={','.join(map(str, spec.sizes))} "
        f"gamma_t={','.join(format(g, '.12g') for g in spec.gamma_t)}"
    )
    io.write_rows_csv(out_path, io.sweep_rows(spec), comment=comment)
    return 0


@cli.command("figures")
@click.option("--out-dir", "out_dir", required=True, type=click.Path())
@click.option("--no-plots", is_flag=True, help="Write only the CSV datasets.")
def cmd_figures(out_dir, no_plots):
    """Emit the two standard chain figure datasets (CSV + rendered PNG)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows1 = figures.fig1_rows()
    rows2 = figures.fig2_rows()
    io.write_rows_csv(
        out / "fig1.csv",
        rows1,
        comment=(
            f"entbound {__version__} fig1 family=chain "
            f"gamma_t={','.join(format(g, '.12g') for g in figures.FIG1_GAMMA_T)} "
            "range=fidelity-positive"
        ),
    )
    io.write_rows_csv(
        out / "fig2.csv",
        rows2,
        comment=(
            f"entbound {__version__} fig2 family=chain "
            f"gamma_t={','.join(format(g, '.12g') for g in figures.FIG2_GAMMA_T)} "
            f"n=2..{figures.FIG2_MAX_N}"
        ),
    )
    if not no_plots:
        figures.render_fig1(rows1, out / "fig1.png")
        figures.render_fig2(rows2, out / "fig2.png")
    return 0


@cli.command("oracle")
@click.option("--seed", default=7, show_default=True, type=int)
@click.option("--n-max", default=12, show_default=True, type=int)
def cmd_oracle(seed, n_max):
    """Run the brute-force verification suites; nonzero exit on any failure."""
    if n_max > 12 or n_max < 1:
        raise io.InputError(f"--n-max must be in 1..12, got {n_max}")
    results = oracle.run_property_suites(seed=seed, n_max=n_max)
    width = max(len(r.name) for r in results)
    failed = False
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failed = failed or not r.passed
        click.echo(
            f"[{status}] {r.name:<{width}}  cases={r.cases:<5d} "
            f"worst={r.worst:.3e}  tol={r.tolerance:.0e}"
        )
    if failed:
        click.echo("oracle: FAILURES detected", err=True)
        return 3
    click.echo(f"oracle: all {len(results)} suites passed (seed={seed}, n_max={n_max})")
    return 0


def main(argv=None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        rv = cli.main(args=argv, prog_name="entbound", standalone_mode=False)
        return int(rv) if rv else 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except (io.InputError, click.ClickException) as exc:
        msg = exc.format_message() if isinstance(exc, click.ClickException) else str(exc)
        click.echo(f"error: {msg}", err=True)
        return 1
    except NotTwoColorable as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
