from .labeled_tree import LabeledTree, tree_ball, tree_local_distance, tree_path
from .contour import ContourPair, Corner, ForestContour, contour_decode, contour_encode, corner_sequence, forest_contour
from .spine import SpineHitsLevel, SpineSteps, SpineTree, SpineWindow, StopRule
from .treefile import dumps_tree, loads_tree, read_tree, write_tree

__all__ = [
    "LabeledTree",
    "tree_ball",
    "tree_local_distance",
    "tree_path",
    "ContourPair",
    "Corner",
    "ForestContour",
    "contour_decode",
    "contour_encode",
    "corner_sequence",
    "forest_contour",
    "SpineHitsLevel",
    "SpineSteps",
    "SpineTree",
    "SpineWindow",
    "StopRule",
    "dumps_tree",
    "loads_tree",
    "read_tree",
    "write_tree",
]
