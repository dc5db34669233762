"""Explicit stabilizer-diagonal ("twirled") states at small qubit counts.

A twirled state is determined by its graph-basis eigenvalues lam (length 2^n)
or equivalently its stabilizer coefficients c. The two are Walsh-Hadamard
duals; with the normalization used here

    lam = WHT(c) / 2^n,        c = WHT(lam),

so that c[0] = sum(lam) = 1 and a_i = c[2^i] are the generator expectations.

Indexing convention: bitstring (i_0, ..., i_{n-1}) maps to the integer with
vertex 0 in the least-significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

STATE_CAP = 20  # hard memory guard: never materialize 2^n vectors past this


class NotAState(ValueError):
    """Coefficients whose eigenvalues dip below -tolerance."""


class CapExceeded(ValueError):
    """Explicit 2^n representation requested beyond the supported size."""


def _check_cap(n: int, cap: int = STATE_CAP):
    if n > cap:
        raise CapExceeded(f"explicit state at n={n} exceeds cap {cap}")


def fwht(v) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform (butterfly, O(n 2^n))."""
    v = np.array(v, dtype=float)
    m = v.size
    if m & (m - 1):
        raise ValueError(f"length {m} is not a power of two")
    h = 1
    while h < m:
        v = v.reshape(-1, 2, h)
        v = np.concatenate((v[:, 0, :] + v[:, 1, :], v[:, 0, :] - v[:, 1, :]), axis=1)
        v = v.reshape(-1)
        h *= 2
    return v


@dataclass(frozen=True, eq=False)
class MeasurementRecord:
    """The n measured generator expectations a_i = tr(rho K_i), each in [-1, 1]."""

    a: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        if a.ndim != 1:
            raise ValueError("expectations must be a flat vector")
        bad = np.nonzero(np.abs(a) > 1 + 1e-12)[0]
        if bad.size:
            raise ValueError(f"a[{bad[0]}] out of [-1,1]")
        a = np.clip(a, -1.0, 1.0)
        a.flags.writeable = False
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return self.a.size


@dataclass(frozen=True, eq=False)
class GraphDiagonalState:
    """Graph-basis eigenvalue vector of a twirled state (small n only)."""

    n: int
    lam: np.ndarray

    def __post_init__(self):
        _check_cap(self.n)
        lam = np.asarray(self.lam, dtype=float)
        if lam.size != 2**self.n:
            raise ValueError(f"expected 2^{self.n} eigenvalues, got {lam.size}")
        if lam.min() < -1e-12:
            raise NotAState(f"negative eigenvalue {lam.min():.3e}")
        if abs(lam.sum() - 1.0) > 1e-9:
            raise NotAState(f"eigenvalues sum to {lam.sum()!r}, not 1")
        lam = np.maximum(lam, 0.0)
        lam.flags.writeable = False
        object.__setattr__(self, "lam", lam)

    @property
    def c(self) -> np.ndarray:
        return c_from_lambda(self.lam)

    @classmethod
    def from_c(cls, c, n: int | None = None) -> "GraphDiagonalState":
        c = np.asarray(c, dtype=float)
        if n is None:
            n = int(c.size).bit_length() - 1
        return cls(n, lambda_from_c(c, n))


def lambda_from_c(c, n: int | None = None, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues from stabilizer coefficients: lam = WHT(c) / 2^n.

    Requires c[0] == 1 (trace normalization); raises NotAState if any
    eigenvalue falls below -tol.
    """
    c = np.asarray(c, dtype=float)
    if n is None:
        n = int(c.size).bit_length() - 1
    _check_cap(n)
    if c.size != 2**n:
        raise ValueError(f"expected 2^{n} coefficients, got {c.size}")
    if abs(c[0] - 1.0) > 1e-9:
        raise ValueError(f"c[0] must be 1 (trace), got {c[0]!r}")
    lam = fwht(c) / 2**n
    if lam.min() < -tol:
        raise NotAState(f"negative eigenvalue {lam.min():.3e}")
    return np.maximum(lam, 0.0)


def c_from_lambda(lam, n: int | None = None) -> np.ndarray:
    """Stabilizer coefficients from eigenvalues: c = WHT(lam)."""
    lam = np.asarray(lam, dtype=float)
    if n is None:
        n = int(lam.size).bit_length() - 1
    _check_cap(n)
    if lam.size != 2**n:
        raise ValueError(f"expected 2^{n} eigenvalues, got {lam.size}")
    return fwht(lam)


def expectations(state: GraphDiagonalState) -> MeasurementRecord:
    """Generator expectations a_i = sum_k (-1)^{k_i} lam_k = c at unit-weight indices."""
    c = state.c
    return MeasurementRecord(c[[1 << i for i in range(state.n)]])


def bitstring_index(target, n: int) -> int:
    """Normalize a target bitstring to its integer index (vertex 0 = LSB).

    Accepts an int, a '0'/'1' string (ordinary binary, last character is
    vertex 0), or a sequence of bits indexed by vertex.
    """
    if isinstance(target, str):
        idx = int(target, 2)
    elif isinstance(target, int):
        idx = target
    else:
        idx = sum(int(b) << i for i, b in enumerate(target))
    if not 0 <= idx < 2**n:
        raise ValueError(f"target {target!r} out of range for n={n}")
    return idx


def fidelity(state: GraphDiagonalState, target=0) -> float:
    """Overlap with one graph-basis state: the eigenvalue at the target index."""
    return float(state.lam[bitstring_index(target, state.n)])
