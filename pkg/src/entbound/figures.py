"""Dephasing-sweep datasets for the two standard chain figures.

fig1: log2(1 + R) lower/upper bounds versus chain length, one curve pair per
gamma_t, restricted to the range where a positive fidelity floor exists
(n < 2 / (1 - exp(-gamma_t))).

fig2: relative-entropy lower/upper bounds versus chain length up to 1000
qubits, gamma_t chosen as -ln(decay) for a few per-generator decay levels.

Both are emitted as CSV; matplotlib renderings are written next to them.
"""

from __future__ import annotations

import math

from . import bounds, io, noise
from .graphs import family, two_color

FIG1_GAMMA_T = (0.02, 0.05, 0.1)
FIG2_DECAYS = (0.999, 0.99, 0.95, 0.9)
FIG2_GAMMA_T = tuple(-math.log(d) for d in FIG2_DECAYS)
FIG2_MAX_N = 1000


def _chain_row(n: int, gt: float) -> dict:
    col = two_color(family("chain", n))
    rec = noise.chain_expectations(n, noise.DephasingParams(gt))
    return io.report_row(n, gt, bounds.report(rec, col))


def fig1_rows() -> list:
    rows = []
    for gt in FIG1_GAMMA_T:
        n_max = math.floor(2.0 / (1.0 - math.exp(-gt)))
        for n in range(2, n_max + 1):
            rows.append(_chain_row(n, gt))
    return rows


def fig2_rows() -> list:
    rows = []
    for gt in FIG2_GAMMA_T:
        for n in range(2, FIG2_MAX_N + 1):
            rows.append(_chain_row(n, gt))
    return rows


def _render(rows, lower_col, upper_col, ylabel, title, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    gammas = sorted({row["gamma_t"] for row in rows})
    colors = plt.cm.viridis([i / max(1, len(gammas) - 1) for i in range(len(gammas))])
    for gt, color in zip(gammas, colors):
        sub = [row for row in rows if row["gamma_t"] == gt]
        ns = [row["n"] for row in sub]
        ax.plot(ns, [row[lower_col] for row in sub], color=color,
                label=f"$\\gamma t$ = {gt:.4g} (lower)")
        ax.plot(ns, [row[upper_col] for row in sub], color=color, linestyle="--",
                label=f"$\\gamma t$ = {gt:.4g} (upper)")
    ax.set_xlabel("chain length $n$")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_fig1(rows, path):
    _render(rows, "log_rob_lower", "log_rob_upper", "$\\log_2(1+R)$",
            "Logarithmic global robustness, dephased chain", path)


def render_fig2(rows, path):
    _render(rows, "rel_ent_lower", "rel_ent_upper", "$E_R$ (bits)",
            "Relative entropy of entanglement, dephased chain", path)
