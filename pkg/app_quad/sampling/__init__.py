from .rng import RngStream
from .samplers import (
    SpineHitsLevel,
    SpineSteps,
    dyck_to_tree,
    extend_kesten,
    sample_eta,
    sample_gw,
    sample_kesten_truncated,
    sample_uniform_tree,
)
from .enumeration import dyck_words, labeled_trees, plane_trees

__all__ = [
    "RngStream",
    "SpineHitsLevel",
    "SpineSteps",
    "dyck_to_tree",
    "extend_kesten",
    "sample_eta",
    "sample_gw",
    "sample_kesten_truncated",
    "sample_uniform_tree",
    "dyck_words",
    "labeled_trees",
    "plane_trees",
]
