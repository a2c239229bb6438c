"""Enumeration and elimination of real Weil polynomials of curves over
finite fields."""

from .enumerate import EnumConstraints, enumerate_real_weil
from .sieve import SieveConfig, SieveReport, TestOutcome, run_pipeline
from .weil import PlaceCountProfile, RealWeilPoly, WeilPoly

__all__ = [
    "EnumConstraints",
    "enumerate_real_weil",
    "SieveConfig",
    "SieveReport",
    "TestOutcome",
    "run_pipeline",
    "PlaceCountProfile",
    "RealWeilPoly",
    "WeilPoly",
]

__version__ = "0.1.0"
