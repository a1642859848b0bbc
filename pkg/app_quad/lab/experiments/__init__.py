from .base import Experiment
from .bijection import Bijection, Enumerate
from .geodesics import Confluence, CutPointsExperiment, DeltaPrimeTail, DeltaTail, Eq4, RDensity, Stabilization
from .horoball import Laplace
from .trees import TreeLaw
from .walk import Theta, WalkLabels

__all__ = [
    "Experiment",
    "Bijection",
    "Enumerate",
    "Confluence",
    "CutPointsExperiment",
    "DeltaPrimeTail",
    "DeltaTail",
    "Eq4",
    "RDensity",
    "Stabilization",
    "Laplace",
    "TreeLaw",
    "Theta",
    "WalkLabels",
]
