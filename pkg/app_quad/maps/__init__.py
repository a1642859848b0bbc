from .rooted_map import (
    CanonicalCode,
    RootedMap,
    build_map,
    canonical_code,
    faces,
    graph_distance,
    relabel,
)
from .holes import QuadrangulationWithHoles, as_quad, ball, local_distance
from .mapfile import MapRecord, dumps_map, loads_map, read_map, write_map

__all__ = [
    "CanonicalCode",
    "RootedMap",
    "build_map",
    "canonical_code",
    "faces",
    "graph_distance",
    "relabel",
    "QuadrangulationWithHoles",
    "as_quad",
    "ball",
    "local_distance",
    "MapRecord",
    "dumps_map",
    "loads_map",
    "read_map",
    "write_map",
]
