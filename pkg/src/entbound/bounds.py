"""Closed-form entanglement bounds from stabilizer expectations, all O(n).

Given the n generator expectations a_i and a two-coloring with Blue set B
(|A| >= |B|), the bounds are:

    F        = max(0, (sum_i a_i - n + 2) / 2)          fidelity floor
    R_lower  = max(0, 2^|B| F - 1)                      global robustness
    R_upper  = max(0, 2^|B| max(0, (sum_B a_i - |B| + 2)/2) - 1)
    S_max    = sum_i H2((1 + a_i)/2)                    max consistent entropy
    E_lower  = max(0, |B| - S_max)                      relative entropy
    E_upper  = |B| - sum_B H2((1 + a_i)/2)

None of these ever materializes a 2^n object, so they scale to thousands of
qubits. Logarithms are base 2 throughout.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .graphs import TwoColoring
from .states import MeasurementRecord


class DomainError(ValueError):
    """Argument outside the mathematical domain of the function."""


@dataclass(frozen=True)
class BoundsReport:
    """All bounds for one measurement record, plus diagnostics."""

    fidelity_floor: float
    rob_lower: float
    rob_upper: float
    log_rob_lower: float
    log_rob_upper: float
    rel_ent_lower: float
    rel_ent_upper: float
    s_max: float
    blue_count: int

    @property
    def fidelity_positive(self) -> bool:
        return self.fidelity_floor > 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def _values(a) -> np.ndarray:
    if isinstance(a, MeasurementRecord):
        return a.a
    return MeasurementRecord(np.asarray(a, dtype=float)).a


def _h2(p: np.ndarray) -> np.ndarray:
    """Binary entropy in bits, elementwise, with 0 log 0 := 0."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    for q in (p, 1.0 - p):
        mask = q > 0.0
        out = out - np.where(mask, q * np.log2(np.where(mask, q, 1.0)), 0.0)
    return out


def binary_entropy(p: float) -> float:
    """H2(p) = -p log2 p - (1-p) log2(1-p) for p in [0, 1]."""
    if not -1e-12 <= p <= 1 + 1e-12:
        raise DomainError(f"binary_entropy argument {p!r} outside [0,1]")
    p = min(max(p, 0.0), 1.0)
    return float(_h2(p))


def min_fidelity(a) -> float:
    """Least graph-state fidelity consistent with the expectations."""
    vals = _values(a)
    return min(1.0, max(0.0, 0.5 * (float(vals.sum()) - vals.size + 2.0)))


def robustness_lower(a, col: TwoColoring) -> float:
    """Certified lower bound on the global robustness of entanglement."""
    return max(0.0, 2.0 ** col.blue_count * min_fidelity(a) - 1.0)


def robustness_upper(a, col: TwoColoring) -> float:
    """Upper bound on the least consistent robustness (Blue generators only).

    The raw expression can reach -1 when the Blue fidelity term vanishes;
    robustness is nonnegative, so the result is clamped at 0.
    """
    vals = _values(a)
    blue = sorted(col.blue)
    m = len(blue)
    blue_fid = max(0.0, 0.5 * (float(vals[blue].sum()) - m + 2.0))
    return max(0.0, 2.0**m * blue_fid - 1.0)


def max_entropy(a) -> float:
    """Largest entropy consistent with the expectations: sum_i H2((1+a_i)/2).

    Equals -sum lam log2 lam of the product distribution over generator
    outcomes, evaluated in O(n).
    """
    vals = _values(a)
    return float(_h2((1.0 + vals) / 2.0).sum())


def rel_entropy_lower(a, col: TwoColoring) -> float:
    """Certified lower bound on the relative entropy of entanglement."""
    return max(0.0, col.blue_count - max_entropy(a))


def rel_entropy_upper(a, col: TwoColoring) -> float:
    """Upper bound on the least consistent relative entropy of entanglement."""
    vals = _values(a)
    blue = sorted(col.blue)
    return float(len(blue) - _h2((1.0 + vals[blue]) / 2.0).sum())


def report(a, col: TwoColoring) -> BoundsReport:
    """Evaluate every bound for one record; log-robustness is log2(1+R)."""
    vals = _values(a)
    if vals.size != col.blue_count + col.amber_count:
        raise ValueError(
            f"record length {vals.size} does not match coloring size "
            f"{col.blue_count + col.amber_count}"
        )
    rob_lo = robustness_lower(vals, col)
    rob_up = robustness_upper(vals, col)
    return BoundsReport(
        fidelity_floor=min_fidelity(vals),
        rob_lower=rob_lo,
        rob_upper=rob_up,
        log_rob_lower=math.log2(1.0 + rob_lo),
        log_rob_upper=math.log2(1.0 + rob_up),
        rel_ent_lower=rel_entropy_lower(vals, col),
        rel_ent_upper=rel_entropy_upper(vals, col),
        s_max=max_entropy(vals),
        blue_count=col.blue_count,
    )
