from .random_walk import (
    LabelProcess,
    WalkTrace,
    label_process,
    returns_by_length,
    stationarity_gap,
    stationarity_table,
    walk,
)
from .rerooting import ThetaReport, reroot, theta_invariance_test

__all__ = [
    "LabelProcess",
    "WalkTrace",
    "label_process",
    "returns_by_length",
    "stationarity_gap",
    "stationarity_table",
    "walk",
    "ThetaReport",
    "reroot",
    "theta_invariance_test",
]
