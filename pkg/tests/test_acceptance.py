"""Acceptance gate: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines. Two criteria are known to fail as literally stated; see the assertion
messages for the numeric witnesses.
"""

import math
import time

import numpy as np
import pytest

from entbound import bounds
from entbound.graphs import family, two_color
from entbound.noise import DephasingParams, chain_expectations, chain_state
from entbound.oracle import (
    dense_spectrum,
    dirichlet_subspace_state,
    lp_min_fidelity_batch,
    numeric_max_entropy,
    subspace_identities,
)
from entbound.states import GraphDiagonalState, MeasurementRecord, c_from_lambda


def _verdict(name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  {detail}" if detail else ""))
    return ok


def test_criterion_closed_form_vs_lp():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(1, 5):
        rng = np.random.default_rng(1000 + n)
        records = np.vstack(
            [rng.uniform(-1, 1, size=(500, n)), rng.uniform(0, 1, size=(500, n))]
        )
        lp = lp_min_fidelity_batch(records)
        closed = np.array([bounds.min_fidelity(a) for a in records])
        worst = max(worst, float(np.abs(lp - closed).max()))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 60
    assert _verdict(
        "closed-form fidelity vs exact LP (n=1..4, 1000 records each)",
        ok,
        f"worst={worst:.2e} elapsed={elapsed:.1f}s",
    )


def test_criterion_entropy_saturation():
    t0 = time.perf_counter()
    worst = 0.0
    for n in (2, 3, 4):
        rng = np.random.default_rng(2000 + n)
        for _ in range(100):
            rec = MeasurementRecord(rng.uniform(-1, 1, size=n))
            worst = max(worst, abs(bounds.max_entropy(rec) - numeric_max_entropy(rec)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-6 and elapsed < 120
    assert _verdict(
        "entropy maximizer saturation (n=2..4, 100 records each)",
        ok,
        f"worst={worst:.2e} elapsed={elapsed:.1f}s",
    )


def test_criterion_pure_state_values():
    graphs = (
        [family("chain", n) for n in range(2, 9)]
        + [family("star", n) for n in range(2, 9)]
        + [family("grid", 2, k) for k in range(1, 6)]
    )
    ok = True
    for g in graphs:
        col = two_color(g)
        rep = bounds.report(MeasurementRecord(np.ones(g.n)), col)
        m = col.blue_count
        ok = ok and rep.rob_lower == rep.rob_upper == 2.0**m - 1.0
        ok = ok and rep.rel_ent_lower == rep.rel_ent_upper == float(m)
    assert _verdict("pure-state bounds coincide at 2^|B|-1 and |B| exactly", ok)


def test_criterion_bound_ordering_and_clamping():
    rng = np.random.default_rng(3000)
    violations = 0
    for _ in range(10_000):
        n = int(rng.integers(1, 17))
        col = two_color(family("chain", n)) if n > 1 else two_color(family("star", 1))
        rep = bounds.report(MeasurementRecord(rng.uniform(-1, 1, size=n)), col)
        good = (
            0 <= rep.rob_lower <= rep.rob_upper
            and 0 <= rep.rel_ent_lower <= rep.rel_ent_upper <= rep.blue_count + 1e-12
        )
        violations += not good
    assert _verdict(
        "bound ordering/clamping over 10^4 random records (n<=16)",
        violations == 0,
        f"violations={violations}",
    )


def test_criterion_fig1_threshold():
    # Documented claim: rob_lower > 0 exactly for chain sizes n <= 21 at
    # gamma_t = 0.1. The fidelity floor is positive up to n = 21, but
    # rob_lower = max(0, 2^|B| F - 1) also needs 2^|B| F > 1; at n = 21,
    # F = 7.93e-4 and 2^10 F = 0.81 < 1, so rob_lower is already 0 there.
    gt = DephasingParams(0.1)
    bad = []
    for n in range(2, 41):
        col = two_color(family("chain", n))
        rep = bounds.report(chain_expectations(n, gt), col)
        expected_positive = n <= 21
        if (rep.rob_lower > 0) != expected_positive:
            bad.append((n, rep.fidelity_floor, rep.rob_lower))
    assert _verdict(
        "robustness threshold at gamma_t=0.1 (positive iff n <= 21)",
        not bad,
        f"mismatches={bad}",
    ), f"rob_lower sign does not match the n<=21 claim at {bad}"


def test_criterion_large_scale_relative_entropy():
    n = 1000
    col = two_color(family("chain", n))
    grid = np.linspace(0.001, 1.0, 100)
    t0 = time.perf_counter()
    reports = [bounds.report(chain_expectations(n, DephasingParams(g)), col) for g in grid]
    elapsed = time.perf_counter() - t0
    ok = elapsed < 1.0
    ok = ok and reports[0].rel_ent_lower > 0  # small gamma_t
    # upper-lower gap nondecreasing in n at fixed gamma_t
    for g in grid[::20]:
        gaps = []
        for size in (10, 100, 500, 1000):
            c = two_color(family("chain", size))
            rep = bounds.report(chain_expectations(size, DephasingParams(g)), c)
            gaps.append(rep.rel_ent_upper - rep.rel_ent_lower)
        ok = ok and all(b >= a - 1e-9 for a, b in zip(gaps, gaps[1:]))
    assert _verdict(
        "n=1000 relative-entropy sweep (<1s, positive lower, growing gap)",
        ok,
        f"elapsed={elapsed:.2f}s",
    )


def test_criterion_state_consistency():
    worst = 0.0
    for g in [family("chain", k) for k in (2, 3, 4, 5)] + [family("star", 4), family("ring", 4)]:
        rng = np.random.default_rng(g.n * 7 + len(g.edges))
        for _ in range(3):
            lam = rng.dirichlet(np.ones(2**g.n))
            got = dense_spectrum(g, c_from_lambda(lam))
            worst = max(worst, float(np.abs(got - np.sort(lam)).max()))
    ok = worst <= 1e-9
    min_lam = 0.0
    for n in range(1, 13):
        for g in (0.0, 0.01, 0.1, 1.0, 10.0):
            min_lam = min(min_lam, float(chain_state(n, DephasingParams(g)).lam.min()))
    ok = ok and min_lam >= -1e-12
    assert _verdict(
        "dense spectra match (n<=5) and dephased chains stay positive (n<=12)",
        ok,
        f"worst_spec={worst:.2e} min_lam={min_lam:.2e}",
    )


def test_criterion_subspace_sandwich():
    # Documented claim: for random Amber-subspace states on chain(4), the
    # report sandwiches |B|-S(rho) and 2^|B| max(lam)-1. The report bounds
    # the LEAST entanglement consistent with the expectations, so for any
    # non-product subspace state |B|-S(rho) strictly exceeds rel_ent_upper
    # (by S_max - S(rho)), and max(lam) generally exceeds the Blue fidelity
    # floor, pushing 2^|B| max(lam)-1 above rob_upper. Only the lower sides
    # hold in general (they are asserted in test_oracle.py).
    col = two_color(family("chain", 4))
    rng = np.random.default_rng(4000)
    violations = []
    for _ in range(100):
        chk = subspace_identities(dirichlet_subspace_state(rng, col, 4), col)
        if not chk.sandwich_ok:
            violations.append(chk)
    sample = violations[0] if violations else None
    detail = f"violations={len(violations)}/100"
    if sample is not None:
        detail += (
            f" e.g. E_R value={sample.rel_ent_value:.4f} vs upper="
            f"{sample.report.rel_ent_upper:.4f}; R value="
            f"{sample.robustness_value:.4f} vs upper={sample.report.rob_upper:.4f}"
        )
    assert _verdict(
        "subspace identity sandwich on 100 random chain(4) states", not violations, detail
    ), f"sandwich violated for {len(violations)}/100 random subspace states; {detail}"
