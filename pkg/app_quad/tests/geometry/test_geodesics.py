from fractions import Fraction

import pytest

from app_quad.errors import ResourceCap, SpineHitsUnresolved
from app_quad.geometry.geodesics import (
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
from app_quad.sampling.samplers import sample_kesten_truncated
from app_quad.trees.spine import SpineHitsLevel

HORIZON = 6


@pytest.fixture
def deep_tree(rng):
    return sample_kesten_truncated(SpineHitsLevel(HORIZON + 2), rng)


# ---------- точные законы ----------

@pytest.mark.parametrize("i", [0, 1, 2, 5, 10, 50])
def test_meeting_probability_closed_form(i):
    assert exact_meeting_probability(i) == Fraction(i + 3, 3 * (i + 1))


def test_meeting_probability_limit():
    assert abs(float(exact_meeting_probability(10_000)) - 1 / 3) < 1e-4
    with pytest.raises(ValueError):
        exact_meeting_probability(-1)


def test_delta_tail():
    assert delta_tail(0) == 1
    assert delta_tail(1) == Fraction(1, 3)
    assert delta_tail(10) == Fraction(2, 132)


def test_set_from_deficits():
    assert set_from_deficits([0, 2, 0, 0], 5) == (0, 1, 4, 5)
    assert set_from_deficits([], 3) == (0, 1, 2, 3)
    assert set_from_deficits([10], 4) == (0,)


# ---------- геодезические окна ----------

def test_extremal_geodesics_are_proper(deep_tree):
    labels = deep_tree.window.labels
    gmax = maximal_geodesic(deep_tree, 0, HORIZON)
    gmin = minimal_geodesic(deep_tree, HORIZON)
    assert gmax.steps == gmin.steps == HORIZON
    assert gmax[0] == gmin[0] == deep_tree.window.spine_vertex[0]
    assert is_proper(gmax.vertices, labels)
    assert is_proper(gmin.vertices, labels)


def test_is_proper():
    assert is_proper([0, 1, 2], [5, 4, 3])
    assert not is_proper([0, 1, 2], [5, 4, 4])


def test_meeting_sets_start_at_root(deep_tree):
    ms = meeting_sets(deep_tree, HORIZON)
    assert ms.R[0] == 0
    assert ms.R_prime[0] == 0
    assert 0 < ms.density() <= 1
    assert all(0 <= i <= HORIZON for i in ms.R)


def test_chopped_trees(deep_tree):
    ch = chopped_trees(deep_tree, 3)
    assert len(ch.trees) == len(ch.deficits) == 3
    assert all(d >= 0 for d in ch.deficits)
    assert ch.prime_deficits == prime_deficits(deep_tree, 3)
    assert all(d >= 0 for d in ch.prime_deficits)


def _windows(rng_factory, horizon, streams=40, cap=300_000):
    for stream in range(streams):
        try:
            yield sample_kesten_truncated(SpineHitsLevel(horizon + 2), rng_factory(stream), cap=cap)
        except ResourceCap:
            continue


@pytest.mark.parametrize("horizon", [HORIZON, 12])
def test_meeting_sets_match_deficits(rng_factory, horizon):
    checked = 0
    for st in _windows(rng_factory, horizon):
        ms = meeting_sets(st, horizon)
        ch = chopped_trees(st, horizon)
        assert ms.R == set_from_deficits(ch.deficits, horizon)
        assert ms.R_prime == set_from_deficits(ch.prime_deficits, horizon)
        checked += 1
    assert checked >= 10


def test_left_corners_between_extremal_geodesics(rng_factory):
    for st in _windows(rng_factory, HORIZON, streams=20):
        w = st.window
        gmax = maximal_geodesic(st, 0, HORIZON)
        gmin = minimal_geodesic(st, HORIZON)
        for i in range(HORIZON):
            lo, hi = gmax.corners[i], gmin.corners[i]
            assert 0 <= lo <= hi
            for v in (gmax[i], gmin[i]):
                assert all(lo <= c <= hi for c in w.corners_of[v] if c >= 0)


# ---------- точки разреза ----------

def test_cut_points_after_i0(deep_tree):
    cp = cut_points(deep_tree, HORIZON, margin=1.0)
    R = meeting_sets(deep_tree, HORIZON).R
    assert all(t in R and t > cp.i0 for t in cp.times)
    assert len(cp.points) == len(cp.times)
    assert 0 <= cp.last_spine_hit <= HORIZON


def test_cut_points_need_margin(deep_tree):
    with pytest.raises(SpineHitsUnresolved):
        cut_points(deep_tree, HORIZON, margin=1000.0)
