"""Numerical Orlicz-space toolkit with a Brezis-Lieb experiment harness."""

from .core import (
    ConjugateResult,
    Family,
    InequalityAudit,
    LogGrid,
    OrliczFunction,
    StructuralConstants,
    conjugate,
    custom,
    evaluate,
    exp_minus,
    from_params,
    power,
    power_log,
    structural_constants,
    young_gap,
)
from .grid import Domain1D, GridFunction, luxemburg_norm, modular, pointwise_combine
from .harness import BLReport, SequenceSpec, generate, run

__version__ = "0.1.0"
