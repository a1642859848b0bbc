from .genfun import (
    F_invariant,
    GenFunTable,
    a_of_x,
    genfun_f,
    genfun_table,
    invariant_defect,
    recursion_residual,
    solve_recursion,
)
from .laplace import laplace_closed, laplace_exact, laplace_limit, w_cdf_small, w_tail
from .boundary import (
    BoundaryStat,
    FloodFill,
    Membership,
    boundary_size,
    classification_table,
    classify_vertex,
    flood_fill_boundary,
    sample_boundary_stat,
    y_count,
)

__all__ = [
    "F_invariant",
    "GenFunTable",
    "a_of_x",
    "genfun_f",
    "genfun_table",
    "invariant_defect",
    "recursion_residual",
    "solve_recursion",
    "laplace_closed",
    "laplace_exact",
    "laplace_limit",
    "w_cdf_small",
    "w_tail",
    "BoundaryStat",
    "FloodFill",
    "Membership",
    "boundary_size",
    "classification_table",
    "classify_vertex",
    "flood_fill_boundary",
    "sample_boundary_stat",
    "y_count",
]
