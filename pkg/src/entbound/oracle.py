"""Brute-force verification of the closed forms at small qubit counts.

Three independent routes are implemented:

* exact fidelity LP by enumeration of basic feasible solutions (n <= 4),
  plus the analytic dual certificate for a weak-duality check;
* entropy maximization with fixed generator marginals by iterative
  proportional fitting (n <= 10);
* dense-matrix reconstruction of twirled states from their Pauli expansion
  (n <= 5) and exact subspace entanglement identities.

None of this is used by the O(n) bound formulas; it exists to catch drift.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import bounds
from .graphs import Graph, TwoColoring
from .states import (
    CapExceeded,
    GraphDiagonalState,
    MeasurementRecord,
    c_from_lambda,
    expectations,
)

LP_CAP = 4
ENTROPY_CAP = 10
DENSE_CAP = 5


class NonConvergence(RuntimeError):
    """Iterative fit failed to meet its residual target."""


class NotSubspaceSupported(ValueError):
    """State support spans more than one Amber-outcome subspace."""


def _values(a) -> np.ndarray:
    if isinstance(a, MeasurementRecord):
        return a.a
    return MeasurementRecord(np.asarray(a, dtype=float)).a


def _bit_table(n: int) -> np.ndarray:
    """(2^n, n) array of bits; column i is bit i (vertex 0 = LSB)."""
    return (np.arange(2**n)[:, None] >> np.arange(n)) & 1


def _constraint_matrix(n: int) -> np.ndarray:
    """Rows: normalization, then sum_k (-1)^{k_i} lam_k for each generator i."""
    signs = 1.0 - 2.0 * _bit_table(n)  # (2^n, n)
    return np.vstack([np.ones(2**n), signs.T])


@lru_cache(maxsize=None)
def _bases(n: int):
    """All nonsingular (n+1)-column bases of the constraint matrix.

    Matrix entries are +-1 so every basis determinant is an integer:
    the singularity test is exact.
    """
    mat = _constraint_matrix(n)
    m = n + 1
    cols = np.array(list(itertools.combinations(range(2**n), m)))
    sub = mat[:, cols].transpose(1, 0, 2)  # (K, m, m)
    dets = np.rint(np.linalg.det(sub))
    keep = dets != 0
    return cols[keep], np.linalg.inv(sub[keep])


def lp_min_fidelity(a) -> float:
    """Exact minimum of lam_0 over {lam >= 0, sum lam = 1, marginals = a}."""
    vals = _values(a)
    return float(lp_min_fidelity_batch(vals[None, :])[0])


def lp_min_fidelity_batch(records: np.ndarray) -> np.ndarray:
    """Vectorized exact LP for a (R, n) batch of measurement records.

    The feasible set is a nonempty bounded polytope (the product
    distribution is always feasible), so the optimum is attained at a
    basic feasible solution; all of them are enumerated.
    """
    records = np.asarray(records, dtype=float)
    n = records.shape[1]
    if n > LP_CAP:
        raise CapExceeded(f"exact LP capped at n={LP_CAP}, got {n}")
    cols, invs = _bases(n)
    has_zero = cols[:, 0] == 0  # combinations are sorted, var 0 sits first
    out = np.empty(records.shape[0])
    for r, a in enumerate(records):
        b = np.concatenate(([1.0], a))
        lam = invs @ b  # (K, m) basic solutions
        feasible = (lam >= -1e-9).all(axis=1)
        if not feasible.any():
            raise RuntimeError("no feasible basis found (should be impossible)")
        obj = np.where(has_zero, lam[:, 0], 0.0)
        out[r] = obj[feasible].min()
    return np.maximum(out, 0.0)


def dual_certificate(a):
    """Analytic dual feasible point (mu, nu) matching the closed form.

    In the unclamped regime mu_i = 1/2 and nu = 1 - n/2 give objective
    (sum a - n + 2)/2; in the clamped regime (mu, nu) = 0 gives 0.
    """
    vals = _values(a)
    n = vals.size
    if 0.5 * (vals.sum() - n + 2.0) > 0.0:
        return np.full(n, 0.5), 1.0 - n / 2.0
    return np.zeros(n), 0.0


def dual_is_feasible(mu, nu, n: int, tol: float = 1e-9) -> bool:
    """Check nu + sum_i (-1)^{k_i} mu_i <= [k == 0] for every bitstring k."""
    signs = 1.0 - 2.0 * _bit_table(n)
    lhs = nu + signs @ np.asarray(mu, dtype=float)
    rhs = np.zeros(2**n)
    rhs[0] = 1.0
    return bool((lhs <= rhs + tol).all())


def dual_value(mu, nu, a) -> float:
    return float(nu + np.dot(mu, _values(a)))


def entropy_bits(lam) -> float:
    """Shannon entropy in bits with 0 log 0 := 0."""
    lam = np.asarray(lam, dtype=float)
    pos = lam[lam > 0]
    return float(-(pos * np.log2(pos)).sum())


def numeric_max_entropy(a, tol: float = 1e-10, fail_tol: float = 1e-8,
                        max_sweeps: int = 500) -> float:
    """Maximize -sum lam log2 lam under the generator marginals, by IPF.

    Round-robin iterative proportional fitting from the uniform start; the
    limit is the I-projection of the uniform distribution, i.e. the
    maximum-entropy distribution on the constraint set.
    """
    vals = _values(a)
    n = vals.size
    if n > ENTROPY_CAP:
        raise CapExceeded(f"numeric entropy maximization capped at n={ENTROPY_CAP}")
    p = (1.0 + vals) / 2.0
    bits = _bit_table(n)
    lam = np.full(2**n, 2.0**-n)
    resid = max(abs(lam[bits[:, i] == 0].sum() - p[i]) for i in range(n))
    if resid < tol:
        return entropy_bits(lam)
    for _ in range(max_sweeps):
        for i in range(n):
            zero = bits[:, i] == 0
            q = lam[zero].sum()
            scale0 = p[i] / q if q > 0 else 0.0
            scale1 = (1.0 - p[i]) / (1.0 - q) if q < 1 else 0.0
            lam = np.where(zero, lam * scale0, lam * scale1)
        resid = max(abs(lam[bits[:, i] == 0].sum() - p[i]) for i in range(n))
        if resid < tol:
            return entropy_bits(lam)
    if resid > fail_tol:
        raise NonConvergence(f"marginal residual {resid:.3e} after {max_sweeps} sweeps")
    return entropy_bits(lam)


_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)


def _generator_matrix(g: Graph, i: int) -> np.ndarray:
    """Dense K_i built from Pauli supports; vertex 0 is the last kron factor."""
    ops = [_I2] * g.n
    ops[i] = _X
    for j in g.neighbors(i):
        ops[j] = _Z
    mat = np.eye(1)
    for j in reversed(range(g.n)):
        mat = np.kron(mat, ops[j])
    return mat


def dense_state_matrix(g: Graph, c) -> np.ndarray:
    """Explicit rho = 2^-n sum_i c_i K_1^{i_1} ... K_n^{i_n}."""
    if g.n > DENSE_CAP:
        raise CapExceeded(f"dense reconstruction capped at n={DENSE_CAP}")
    c = np.asarray(c, dtype=float)
    ks = [_generator_matrix(g, i) for i in range(g.n)]
    dim = 2**g.n
    rho = np.zeros((dim, dim))
    for idx in range(2**g.n):
        term = np.eye(dim)
        for i in range(g.n):
            if (idx >> i) & 1:
                term = term @ ks[i]
        rho += c[idx] * term
    return rho / dim


def dense_spectrum(g: Graph, c) -> np.ndarray:
    """Sorted eigenvalues of the densely reconstructed state."""
    return np.sort(np.linalg.eigvalsh(dense_state_matrix(g, c)))


@dataclass(frozen=True)
class SubspaceCheck:
    """Exact subspace entanglement values against the closed-form bounds."""

    blue_count: int
    entropy: float
    rel_ent_value: float
    robustness_value: float
    report: bounds.BoundsReport
    rel_lower_ok: bool
    rel_upper_ok: bool
    rob_lower_ok: bool
    rob_upper_ok: bool

    @property
    def sandwich_ok(self) -> bool:
        return self.rel_lower_ok and self.rel_upper_ok and self.rob_lower_ok and self.rob_upper_ok

    @property
    def lower_bounds_ok(self) -> bool:
        return self.rel_lower_ok and self.rob_lower_ok


def subspace_identities(state: GraphDiagonalState, col: TwoColoring,
                        tol: float = 1e-9) -> SubspaceCheck:
    """Exact E_R = |B| - S and R = 2^|B| max(lam) - 1 for subspace states.

    Requires all support on bitstrings sharing one Amber-outcome pattern;
    checks each exact value against the corresponding report bounds.
    """
    lam = state.lam
    support = np.nonzero(lam > 1e-12)[0]
    amber_mask = sum(1 << i for i in col.amber)
    patterns = {int(idx) & amber_mask for idx in support}
    if len(patterns) > 1:
        raise NotSubspaceSupported(
            f"support spans {len(patterns)} Amber-outcome subspaces"
        )
    m = col.blue_count
    s = entropy_bits(lam)
    rel_value = m - s
    rob_value = 2.0**m * float(lam.max()) - 1.0
    rep = bounds.report(expectations(state), col)
    return SubspaceCheck(
        blue_count=m,
        entropy=s,
        rel_ent_value=rel_value,
        robustness_value=rob_value,
        report=rep,
        rel_lower_ok=rep.rel_ent_lower <= rel_value + tol,
        rel_upper_ok=rel_value <= rep.rel_ent_upper + tol,
        rob_lower_ok=rep.rob_lower <= rob_value + tol,
        rob_upper_ok=rob_value <= rep.rob_upper + tol,
    )


def random_record(rng: np.random.Generator, n: int, nonnegative: bool = False) -> MeasurementRecord:
    lo = 0.0 if nonnegative else -1.0
    return MeasurementRecord(rng.uniform(lo, 1.0, size=n))


def product_subspace_state(blue_a: np.ndarray, col: TwoColoring, n: int) -> GraphDiagonalState:
    """Amber-0-subspace state with independent Blue outcomes at the given a_i."""
    lam = np.zeros(2**n)
    blue = sorted(col.blue)
    m = len(blue)
    p = (1.0 + np.asarray(blue_a, dtype=float)) / 2.0
    for pattern in range(2**m):
        w = 1.0
        idx = 0
        for j, v in enumerate(blue):
            bit = (pattern >> j) & 1
            w *= (1.0 - p[j]) if bit else p[j]
            idx |= bit << v
        lam[idx] = w
    return GraphDiagonalState(n, lam)


def dirichlet_subspace_state(rng: np.random.Generator, col: TwoColoring,
                             n: int) -> GraphDiagonalState:
    """Amber-0-subspace state with Dirichlet(1,...,1) weights over Blue patterns."""
    blue = sorted(col.blue)
    m = len(blue)
    weights = rng.dirichlet(np.ones(2**m))
    lam = np.zeros(2**n)
    for pattern, w in enumerate(weights):
        idx = 0
        for j, v in enumerate(blue):
            idx |= ((pattern >> j) & 1) << v
        lam[idx] = w
    return GraphDiagonalState(n, lam)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    worst: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.worst <= self.tolerance


def run_property_suites(seed: int = 7, n_max: int = 12) -> list:
    """Run every oracle property suite; returns one result row per suite."""
    if n_max > 12:
        raise ValueError(f"n_max must be at most 12, got {n_max}")
    from . import noise  # local import: avoids a cycle at module load
    from .graphs import family, two_color

    rng = np.random.default_rng(seed)
    results = []

    # closed-form fidelity vs exact LP, plus weak duality of the analytic dual
    worst_lp = 0.0
    worst_dual = 0.0
    cases = 0
    for n in range(1, LP_CAP + 1):
        for nonneg in (False, True):
            recs = np.array([random_record(rng, n, nonneg).a for _ in range(100)])
            lp = lp_min_fidelity_batch(recs)
            closed = np.array([bounds.min_fidelity(a) for a in recs])
            worst_lp = max(worst_lp, float(np.abs(lp - closed).max()))
            for a, opt in zip(recs, lp):
                mu, nu = dual_certificate(a)
                if not dual_is_feasible(mu, nu, n):
                    worst_dual = max(worst_dual, np.inf)
                worst_dual = max(worst_dual, dual_value(mu, nu, a) - float(opt))
            cases += recs.shape[0]
    results.append(SuiteResult("fidelity_lp_vs_closed_form", cases, worst_lp, 1e-9))
    results.append(SuiteResult("weak_duality", cases, worst_dual, 1e-9))

    # product-form entropy maximizer vs iterative proportional fitting
    worst = 0.0
    cases = 0
    for n in range(2, 5):
        for _ in range(50):
            rec = random_record(rng, n)
            worst = max(worst, abs(bounds.max_entropy(rec) - numeric_max_entropy(rec)))
            cases += 1
    results.append(SuiteResult("entropy_ipf_vs_product_form", cases, worst, 1e-6))

    # dense Pauli reconstruction reproduces the eigenvalue vector
    worst = 0.0
    cases = 0
    for g in [family("chain", k) for k in range(2, min(DENSE_CAP, n_max) + 1)] + [
        family("star", 4),
        family("ring", 4),
    ]:
        for _ in range(5):
            lam = rng.dirichlet(np.ones(2**g.n))
            spec_dense = dense_spectrum(g, c_from_lambda(lam))
            worst = max(worst, float(np.abs(spec_dense - np.sort(lam)).max()))
            cases += 1
    results.append(SuiteResult("dense_spectrum_vs_eigenvalues", cases, worst, 1e-9))

    # dephasing chain states stay positive semidefinite
    worst = 0.0
    cases = 0
    for n in range(1, min(12, n_max) + 1):
        for gt in (0.0, 0.01, 0.1, 1.0, 10.0):
            lam = noise.chain_state(n, noise.DephasingParams(gt)).lam
            worst = max(worst, float(-lam.min()))
            cases += 1
    results.append(SuiteResult("dephasing_positivity", cases, worst, 1e-12))

    # subspace identities: exact values never undercut the certified lower
    # bounds, and product-form Blue outcomes saturate the entropy bound
    g4 = family("chain", 4)
    col4 = two_color(g4)
    worst_lower = 0.0
    worst_tight = 0.0
    cases = 0
    for _ in range(50):
        blue_a = rng.uniform(-1.0, 1.0, size=col4.blue_count)
        chk = subspace_identities(product_subspace_state(blue_a, col4, 4), col4)
        worst_lower = max(
            worst_lower,
            chk.report.rel_ent_lower - chk.rel_ent_value,
            chk.report.rob_lower - chk.robustness_value,
        )
        worst_tight = max(worst_tight, abs(chk.rel_ent_value - chk.report.rel_ent_upper))
        cases += 1
    for _ in range(50):
        chk = subspace_identities(dirichlet_subspace_state(rng, col4, 4), col4)
        worst_lower = max(
            worst_lower,
            chk.report.rel_ent_lower - chk.rel_ent_value,
            chk.report.rob_lower - chk.robustness_value,
        )
        cases += 1
    results.append(SuiteResult("subspace_lower_bounds", cases, worst_lower, 1e-9))
    results.append(SuiteResult("subspace_product_entropy_tight", 50, worst_tight, 1e-9))

    return results
