import pytest

from app_quad.errors import LabelParityViolation, LeftSafeRegion
from app_quad.maps.holes import QuadrangulationWithHoles
from app_quad.sampling.samplers import sample_uniform_tree
from app_quad.schaeffer.construct import phi_finite
from app_quad.walk.random_walk import (
    WalkTrace,
    label_process,
    returns_by_length,
    stationarity_gap,
    stationarity_table,
    walk,
)


# ---------- блуждание ----------

def test_walk_follows_darts(path_map, rng):
    trace = walk(path_map, 20, rng)
    assert trace.steps == 20
    assert trace.complete
    assert trace.edges[0] == path_map.root
    for e, v in zip(trace.edges, trace.vertices):
        assert path_map.tail(e) == v
    for a, b in zip(trace.edges, trace.edges[1:]):
        assert path_map.tail(b) == path_map.head(a)


def test_walk_is_reproducible(rng_factory):
    pq = phi_finite(sample_uniform_tree(15, rng_factory(1)), 0)
    assert walk(pq.quad, 50, rng_factory(2)).edges == walk(pq.quad, 50, rng_factory(2)).edges


def test_walk_rejects_negative(path_map, rng):
    with pytest.raises(ValueError):
        walk(path_map, -1, rng)


def test_walk_stops_at_hole(path_map, rng):
    holed = QuadrangulationWithHoles(path_map, frozenset({0}), 1)
    with pytest.raises(LeftSafeRegion) as exc:
        walk(holed, 5, rng)
    assert exc.value.step == 1
    assert exc.value.trace.edges == (path_map.root,)
    assert not exc.value.trace.complete


# ---------- процесс меток ----------

def test_labels_change_by_one(rng_factory):
    tree = sample_uniform_tree(20, rng_factory(3))
    pq = phi_finite(tree, 1)
    proc = label_process(walk(pq.quad, 200, rng_factory(4)), pq.labels)
    assert set(proc.deltas()) <= {-1, 1}
    assert proc.increments[-1] + proc.increments[1] == 200


def test_parity_violation(path_map, rng):
    with pytest.raises(LabelParityViolation):
        label_process(walk(path_map, 3, rng), [0, 0, 0])


@pytest.fixture
def proc():
    trace = WalkTrace(edges=(0, 0, 0, 0, 0), vertices=(0, 1, 0, 1, 2), stream=())
    return label_process(trace, [0, 1, 2])


def test_process_statistics(proc):
    assert proc.sequence == (0, 1, 0, 1, 2)
    assert proc.first_increment == 1
    assert proc.drift == pytest.approx(0.5)
    assert proc.returns_to_start == 1
    assert proc.max_excursion == 2
    assert proc.increments == {-1: 1, 1: 3}


def test_returns_by_length(proc):
    assert returns_by_length(proc, [1, 2, 4]) == [0, 1, 1]


# ---------- стационарность ----------

def test_stationarity_table(proc):
    assert stationarity_table([proc], 0, width=2) == {(1, -1): 1}
    assert stationarity_table([proc], 3, width=2) == {}


def test_stationarity_gap():
    assert stationarity_gap({"a": 5, "b": 5}, {"a": 5, "b": 5}) == 0.0
    assert stationarity_gap({"a": 10}, {"b": 10}) > 4.0
    assert stationarity_gap({}, {"a": 1}) == 0.0
