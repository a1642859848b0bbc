from fractions import Fraction

import pytest

from app_quad.maps.holes import QuadrangulationWithHoles
from app_quad.walk.rerooting import THETA_EXACT_MAX_N, reroot, theta_invariance_test


# ---------- перекоренение ----------

def test_reroot(path_map):
    assert reroot(path_map, 3).root == 3
    with pytest.raises(ValueError):
        reroot(QuadrangulationWithHoles(path_map, frozenset({0}), 1), 1)


@pytest.mark.parametrize("n, maps", [(1, 2), (2, 9)])
def test_theta_is_exactly_invariant(n, maps):
    rep = theta_invariance_test(n)
    assert rep.maps == maps
    assert rep.invariant
    assert rep.reversal_invariant
    assert rep.max_deviation() == Fraction(0)
    assert sum(rep.after_step.values()) == 1


def test_theta_range():
    with pytest.raises(ValueError):
        theta_invariance_test(0)
    with pytest.raises(ValueError):
        theta_invariance_test(THETA_EXACT_MAX_N + 1)
