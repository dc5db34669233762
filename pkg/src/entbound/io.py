"""JSON ingestion and CSV emission for the command-line front end.

Formats:
  graph        {"n": <int>, "edges": [[u, v], ...]}
  measurements {"a": [<float>, ...]}
  state        {"n": <int>, "lambda": [...]} or {"n": <int>, "c": [...]}
  sweep spec   {"family": "chain", "sizes": [...], "gamma_t": [...]}

CSV uses comma separators, '.' decimals, and '#'-prefixed comment lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import bounds, noise
from .graphs import Graph, InvalidParams, two_color
from .states import GraphDiagonalState, MeasurementRecord, lambda_from_c


class InputError(Exception):
    """Unreadable or schema-violating input; message carries diagnostics."""


SWEEP_COLUMNS = (
    "n",
    "gamma_t",
    "F",
    "rob_lower",
    "rob_upper",
    "log_rob_lower",
    "log_rob_upper",
    "rel_ent_lower",
    "rel_ent_upper",
)


def _load_json(path) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top-level JSON value must be an object")
    return data


def load_graph(path) -> Graph:
    data = _load_json(path)
    if "n" not in data or "edges" not in data:
        raise InputError(f"{path}: graph JSON needs keys 'n' and 'edges'")
    if not isinstance(data["n"], int):
        raise InputError(f"{path}: field 'n' must be an integer")
    edges = data["edges"]
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 for e in edges
    ):
        raise InputError(f"{path}: field 'edges' must be a list of [u, v] pairs")
    try:
        return Graph.from_json(data)
    except InvalidParams as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_measurements(path, n: int) -> MeasurementRecord:
    data = _load_json(path)
    if "a" not in data or not isinstance(data["a"], list):
        raise InputError(f"{path}: measurement JSON needs a list under key 'a'")
    if len(data["a"]) != n:
        raise InputError(
            f"{path}: got {len(data['a'])} expectations for a graph with n={n}"
        )
    try:
        return MeasurementRecord(np.asarray(data["a"], dtype=float))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_state(path) -> GraphDiagonalState:
    data = _load_json(path)
    if "n" not in data or not isinstance(data["n"], int):
        raise InputError(f"{path}: state JSON needs integer key 'n'")
    keys = [k for k in ("lambda", "c") if k in data]
    if len(keys) != 1:
        raise InputError(f"{path}: state JSON needs exactly one of 'lambda' or 'c'")
    n = data["n"]
    try:
        if keys[0] == "lambda":
            return GraphDiagonalState(n, np.asarray(data["lambda"], dtype=float))
        return GraphDiagonalState(n, lambda_from_c(np.asarray(data["c"], dtype=float), n))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


@dataclass(frozen=True)
class SweepSpec:
    family: str
    sizes: tuple
    gamma_t: tuple


def load_sweep_spec(path) -> SweepSpec:
    data = _load_json(path)
    for key in ("family", "sizes", "gamma_t"):
        if key not in data:
            raise InputError(f"{path}: sweep spec needs key '{key}'")
    if data["family"] != "chain":
        raise InputError(f"{path}: unsupported family {data['family']!r} (only 'chain')")
    sizes = data["sizes"]
    gammas = data["gamma_t"]
    if not isinstance(sizes, list) or not sizes:
        raise InputError(f"{path}: 'sizes' must be a nonempty list")
    if not isinstance(gammas, list) or not gammas:
        raise InputError(f"{path}: 'gamma_t' must be a nonempty list")
    if any(not isinstance(s, int) or s < 2 for s in sizes):
        raise InputError(f"{path}: chain sizes must be integers >= 2")
    if any(g < 0 for g in gammas):
        raise InputError(f"{path}: gamma_t values must be nonnegative")
    return SweepSpec("chain", tuple(sizes), tuple(float(g) for g in gammas))


def sweep_rows(spec: SweepSpec):
    """One report row per (n, gamma_t): n ascending, gamma_t in listed order."""
    from .graphs import family, two_color

    for n in sorted(spec.sizes):
        col = two_color(family(spec.family, n))
        for gt in spec.gamma_t:
            rec = noise.chain_expectations(n, noise.DephasingParams(gt))
            yield report_row(n, gt, bounds.report(rec, col))


def report_row(n: int, gamma_t: float, rep: bounds.BoundsReport) -> dict:
    return {
        "n": n,
        "gamma_t": gamma_t,
        "F": rep.fidelity_floor,
        "rob_lower": rep.rob_lower,
        "rob_upper": rep.rob_upper,
        "log_rob_lower": rep.log_rob_lower,
        "log_rob_upper": rep.log_rob_upper,
        "rel_ent_lower": rep.rel_ent_lower,
        "rel_ent_upper": rep.rel_ent_upper,
    }


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".12g")


def write_rows_csv(path, rows, comment: str | None = None):
    """Deterministic CSV: fixed column order, '%.12g' floats, '#' comments."""
    with open(path, "w", newline="") as fh:
        if comment:
            fh.write(f"# {comment}\n")
        fh.write(",".join(SWEEP_COLUMNS) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(row[c]) for c in SWEEP_COLUMNS) + "\n")
