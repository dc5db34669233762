"""Certified entanglement bounds for large two-colorable graph states.

Everything needed for the O(n) bound pipeline is re-exported here; the
brute-force verification routes live in :mod:`entbound.oracle`.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundsReport,
    binary_entropy,
    max_entropy,
    min_fidelity,
    rel_entropy_lower,
    rel_entropy_upper,
    report,
    robustness_lower,
    robustness_upper,
)
from .graphs import (
    Graph,
    InvalidParams,
    NotTwoColorable,
    StabilizerGenerator,
    TwoColoring,
    family,
    generators,
    two_color,
)
from .noise import DephasingParams, chain_coefficient, chain_expectations, chain_state
from .states import (
    CapExceeded,
    GraphDiagonalState,
    MeasurementRecord,
    NotAState,
    c_from_lambda,
    expectations,
    fidelity,
    fwht,
    lambda_from_c,
)

__all__ = [
    "__version__",
    "BoundsReport",
    "CapExceeded",
    "DephasingParams",
    "Graph",
    "GraphDiagonalState",
    "InvalidParams",
    "MeasurementRecord",
    "NotAState",
    "NotTwoColorable",
    "StabilizerGenerator",
    "TwoColoring",
    "binary_entropy",
    "c_from_lambda",
    "chain_coefficient",
    "chain_expectations",
    "chain_state",
    "expectations",
    "family",
    "fidelity",
    "fwht",
    "generators",
    "lambda_from_c",
    "max_entropy",
    "min_fidelity",
    "rel_entropy_lower",
    "rel_entropy_upper",
    "report",
    "robustness_lower",
    "robustness_upper",
    "two_color",
]
