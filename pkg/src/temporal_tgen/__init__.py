"""Uniform sampling of simple temporal graphs with a given degree sequence and lifetime."""

from .seq_core import (
    DegreeTuple,
    InvalidParameter,
    NotRealizable,
    OddDegreeSum,
    TGenError,
    is_realizable,
    main_path_eligible,
)
from .tgen import RestartLimitExceeded, RunConfig, RunStats, SimpleTemporalGraph, generate, generate_batch

__version__ = "0.1.0"

__all__ = [
    "DegreeTuple", "InvalidParameter", "NotRealizable", "OddDegreeSum", "TGenError",
    "is_realizable", "main_path_eligible", "RestartLimitExceeded", "RunConfig",
    "RunStats", "SimpleTemporalGraph", "generate", "generate_batch",
]
