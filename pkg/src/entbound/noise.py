"""Local dephasing of linear-chain graph states.

Under independent Z-dephasing at rate gamma, the stabilizer coefficients of a
chain graph state decay exponentially in the index weight:

    c_i(t) = exp(-gamma t * weight(i)),

so only the dimensionless product gamma*t ever enters. The formula is applied
to the linear chain only; per-generator decay a_i = exp(-gamma t) is the only
piece exposed for other uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import CapExceeded, GraphDiagonalState, MeasurementRecord, lambda_from_c

CHAIN_STATE_CAP = 12


@dataclass(frozen=True)
class DephasingParams:
    """Dimensionless dephasing exposure gamma*t >= 0."""

    gamma_t: float

    def __post_init__(self):
        if not self.gamma_t >= 0.0:
            raise ValueError(f"gamma_t must be nonnegative, got {self.gamma_t!r}")


def _popcount(k):
    k = np.array(k, dtype=np.int64, copy=True)
    out = np.zeros_like(k)
    while k.any():
        out += k & 1
        k >>= 1
    return out


def chain_coefficient(index: int, params: DephasingParams) -> float:
    """Dephased stabilizer coefficient exp(-gamma_t * weight(index))."""
    return math.exp(-params.gamma_t * int(_popcount(index)))


def chain_expectations(n: int, params: DephasingParams) -> MeasurementRecord:
    """Generator expectations of the dephased chain: a_i = exp(-gamma_t)."""
    if n < 1:
        raise ValueError(f"chain needs n >= 1, got {n}")
    return MeasurementRecord(np.full(n, math.exp(-params.gamma_t)))


def chain_state(n: int, params: DephasingParams) -> GraphDiagonalState:
    """Full explicit dephased chain state; capped at n <= 12."""
    if n > CHAIN_STATE_CAP:
        raise CapExceeded(f"explicit chain state at n={n} exceeds cap {CHAIN_STATE_CAP}")
    if n < 1:
        raise ValueError(f"chain needs n >= 1, got {n}")
    weights = _popcount(np.arange(2**n))
    c = np.exp(-params.gamma_t * weights)
    return GraphDiagonalState(n, lambda_from_c(c, n))
