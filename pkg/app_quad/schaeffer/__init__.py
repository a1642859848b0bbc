from .successor import SINK, SuccessorTable, iterate_successor, next_smaller, successor
from .construct import (
    PointedQuadrangulation,
    StableBall,
    StabilizationCertificate,
    WindowQuadrangulation,
    deepen_and_ball,
    phi_finite,
    phi_truncated,
    window_map,
)
from .augmented import AugmentedMap, TreeEdge, augmented_map, face_tree_edges
from .inverse import phi_inverse_finite
from .enumeration import EnumerationResult, enumerate_quadrangulations, pointed_images

__all__ = [
    "SINK",
    "SuccessorTable",
    "iterate_successor",
    "next_smaller",
    "successor",
    "PointedQuadrangulation",
    "StableBall",
    "StabilizationCertificate",
    "WindowQuadrangulation",
    "deepen_and_ball",
    "phi_finite",
    "phi_truncated",
    "window_map",
    "AugmentedMap",
    "TreeEdge",
    "augmented_map",
    "face_tree_edges",
    "phi_inverse_finite",
    "EnumerationResult",
    "enumerate_quadrangulations",
    "pointed_images",
]
