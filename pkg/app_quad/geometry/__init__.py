from .geodesics import (
    ChoppedTrees,
    CutPoints,
    GeodesicPath,
    MeetingSets,
    chopped_trees,
    cut_points,
    delta_tail,
    exact_meeting_probability,
    is_proper,
    maximal_geodesic,
    meeting_sets,
    minimal_geodesic,
    prime_deficits,
    set_from_deficits,
)
from .enumerate_paths import enumerate_geodesics
from .metric_labels import (
    CDReconstruction,
    ConfluenceWitness,
    LabelInference,
    cd_reconstruct,
    confluence_check,
    infer_labels_from_metric,
    successor_chain_geodesic,
)
from .bounds import BoundReport, check_distance_bounds

__all__ = [
    "ChoppedTrees",
    "CutPoints",
    "GeodesicPath",
    "MeetingSets",
    "chopped_trees",
    "cut_points",
    "delta_tail",
    "exact_meeting_probability",
    "is_proper",
    "maximal_geodesic",
    "meeting_sets",
    "minimal_geodesic",
    "prime_deficits",
    "set_from_deficits",
    "enumerate_geodesics",
    "CDReconstruction",
    "ConfluenceWitness",
    "LabelInference",
    "cd_reconstruct",
    "confluence_check",
    "infer_labels_from_metric",
    "successor_chain_geodesic",
    "BoundReport",
    "check_distance_bounds",
]
