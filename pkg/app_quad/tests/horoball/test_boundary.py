import pytest

from app_quad.errors import InsufficientCertification, RootTooDeep, WrongTruncation
from app_quad.horoball.boundary import (
    Membership,
    boundary_size,
    classify_vertex,
    flood_fill_boundary,
    sample_boundary_stat,
    y_count,
)
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import sample_kesten_truncated
from app_quad.schaeffer.construct import window_map
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineHitsLevel, SpineTree
from app_quad.trees.treefile import loads_tree


# ---------- Y(−r) и размер границы ----------

def test_y_count_stops_at_first_hit():
    tree = loads_tree("(0 (-1 (0)) (-1) (1))")
    assert y_count(tree, 1) == 2
    assert y_count(tree, 5) == 0


def test_y_count_root_too_deep():
    with pytest.raises(RootTooDeep):
        y_count(LabeledTree.single(-1), 1)


def test_boundary_size_by_hand():
    st = SpineTree((0, -1), (loads_tree("(0 (-1))"),), (LabeledTree.single(0),), SpineHitsLevel(1))
    stat = boundary_size(st, 1)
    assert stat.size == 2
    assert stat.rescaled == 4.0


def test_boundary_needs_first_hit():
    leaf = LabeledTree.single
    st = SpineTree((0, -1, -2), (leaf(0), leaf(-1)), (leaf(0), leaf(-1)), SpineHitsLevel(2))
    with pytest.raises(WrongTruncation):
        boundary_size(st, 1)


def test_sampled_stat_is_reproducible():
    a = sample_boundary_stat(4, RngStream(3, 0), replica=7)
    b = sample_boundary_stat(4, RngStream(3, 0), replica=7)
    assert a == b
    assert a.size >= 1
    assert a.replica == 7


# ---------- классификация на окне ----------

@pytest.fixture
def window(rng):
    st = sample_kesten_truncated(SpineHitsLevel(6), rng)
    return window_map(st, 1)


def test_root_is_inside(window):
    assert classify_vertex(window, window.root_vertex, 2) == Membership.INSIDE


def test_classify_needs_deep_window(window):
    with pytest.raises(InsufficientCertification):
        classify_vertex(window, window.root_vertex, 6)


def test_flood_fill_labels(window):
    ff = flood_fill_boundary(window, 2)
    assert window.root_vertex in ff.inside
    assert all(window.labels[v] > -2 for v in ff.inside)
    assert all(window.labels[v] == -2 for v in ff.boundary)
    assert ff.boundary, "спина пересекает уровень −2"


def test_flood_fill_needs_margin(window):
    with pytest.raises(InsufficientCertification):
        flood_fill_boundary(window, 5)
