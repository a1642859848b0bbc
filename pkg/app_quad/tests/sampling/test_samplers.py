import math
from collections import Counter

import pytest

from app_quad.errors import ResourceCap
from app_quad.geometry.geodesics import delta_tail, prime_deficits
from app_quad.sampling.enumeration import dyck_words, labeled_trees, plane_trees
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import (
    LabelFloor,
    dyck_to_tree,
    extend_kesten,
    sample_eta,
    sample_excursion_floor,
    sample_gw,
    sample_gw_floor,
    sample_kesten_truncated,
    sample_uniform_tree,
)
from app_quad.trees.spine import SpineHitsLevel, SpineSteps

CATALAN = [1, 1, 2, 5, 14, 42]


# ---------- перебор ----------

@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_dyck_and_plane_counts(n):
    assert sum(1 for _ in dyck_words(n)) == CATALAN[n]
    trees = list(plane_trees(n))
    assert len(trees) == CATALAN[n]
    assert len(set(trees)) == CATALAN[n]
    assert all(t.size == n for t in trees)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_labeled_tree_counts(n):
    trees = list(labeled_trees(n))
    assert len(trees) == 3 ** n * CATALAN[n]
    assert len(set(trees)) == len(trees)
    assert all(t.root_label == 0 for t in trees)
    for t in trees:
        t.check()


def test_dyck_to_tree_with_increments():
    t = dyck_to_tree([1, 1, -1, -1], root_label=2, increments=[-1, 1])
    assert t.labels == (2, 1, 2)
    assert t.children == ((1,), (2,), ())


# ---------- ГВ-деревья ----------

def test_gw_is_valid_and_reproducible():
    a = sample_gw(3, RngStream(5, 1))
    b = sample_gw(3, RngStream(5, 1))
    assert a == b
    assert a.root_label == 3
    a.check()


def test_gw_prune_below(rng_factory):
    assert sample_gw(0, rng_factory(0), prune_below=0).size == 0
    for stream in range(20):
        t = sample_gw(0, rng_factory(stream), prune_below=-1)
        for v, lab in enumerate(t.labels):
            if lab <= -1:
                assert t.children[v] == (), "вершины ниже порога не ветвятся"


def test_gw_node_cap(rng_factory):
    raised = 0
    for stream in range(50):
        try:
            t = sample_gw(0, rng_factory(stream), cap=1)
        except ResourceCap as e:
            assert e.cap == 1
            raised += 1
        else:
            assert t.size == 0
    assert raised > 0


# ---------- равномерные деревья ----------

def test_uniform_tree_shape(rng):
    t = sample_uniform_tree(12, rng)
    assert t.size == 12
    assert t.root_label == 0
    t.check()


def test_uniform_tree_rejects_empty(rng):
    with pytest.raises(ValueError):
        sample_uniform_tree(0, rng)


def test_uniform_tree_hits_every_labeled_tree(rng):
    seen = Counter(sample_uniform_tree(2, rng) for _ in range(3000))
    assert set(seen) == set(labeled_trees(2))
    assert all(100 < c < 240 for c in seen.values())


# ---------- деревья Кестена ----------

def test_kesten_stops_at_level(rng):
    st = sample_kesten_truncated(SpineHitsLevel(2), rng)
    assert st.spine[-1] == -2
    assert -2 not in st.spine[:-1]
    assert len(st.left) == len(st.right) == st.K


def test_kesten_fixed_steps(rng):
    st = sample_kesten_truncated(SpineSteps(7), rng)
    assert st.K == 7
    assert all(abs(b - a) <= 1 for a, b in zip(st.spine, st.spine[1:]))


def test_extend_matches_direct_sample():
    rng_a = RngStream(9, 2)
    short = sample_kesten_truncated(SpineSteps(3), rng_a)
    extended = extend_kesten(short, SpineSteps(6), rng_a)
    direct = sample_kesten_truncated(SpineSteps(6), RngStream(9, 2))
    assert extended.spine == direct.spine
    assert extended.left == direct.left
    assert extended.right == direct.right


def test_extend_keeps_prefix(rng):
    short = sample_kesten_truncated(SpineSteps(2), rng)
    longer = extend_kesten(short, SpineSteps(5), rng)
    assert longer.spine[:3] == short.spine
    assert extend_kesten(longer, SpineSteps(3), rng).K == 5


def test_eta_is_a_bit(rng):
    assert {sample_eta(rng) for _ in range(64)} == {0, 1}


# ---------- частоты ----------

def _close(hits, n, p, sigmas=4.0):
    return abs(hits / n - p) <= sigmas * math.sqrt(p * (1 - p) / n)


def test_gw_size_law():
    rng = RngStream(31, 0)
    n = 4000
    sizes = Counter()
    for _ in range(n):
        try:
            sizes[sample_gw(0, rng, cap=10_000).size] += 1
        except ResourceCap:
            sizes["big"] += 1
    for s in range(4):
        catalan = math.comb(2 * s, s) // (s + 1)
        assert _close(sizes[s], n, catalan * 2.0 ** -(2 * s + 1)), s


def test_kesten_first_spine_step_is_uniform():
    rng = RngStream(32, 0)
    steps = Counter()
    for _ in range(3000):
        try:
            st = sample_kesten_truncated(SpineSteps(1), rng, cap=100_000)
        except ResourceCap:
            continue
        steps[st.spine[1]] += 1
    n = sum(steps.values())
    assert set(steps) == {-1, 0, 1}
    assert all(_close(steps[x], n, 1 / 3) for x in (-1, 0, 1))


def test_uniform_tree_shapes_n3():
    rng = RngStream(33, 0)
    n = 2500
    shapes = Counter(sample_uniform_tree(3, rng).children for _ in range(n))
    assert len(shapes) == CATALAN[3]
    assert all(_close(c, n, 1 / CATALAN[3]) for c in shapes.values())


# ---------- минимум меток без построения дерева ----------

def test_gw_floor_root_below_floor(rng):
    assert sample_gw_floor(-3, rng, -2) == LabelFloor(-3, 1)


def test_gw_floor_stops_at_floor(rng_factory):
    for stream in range(50):
        res = sample_gw_floor(0, rng_factory(stream), -2)
        assert not res.censored
        assert -2 <= res.low <= 0


def test_gw_floor_is_reproducible():
    assert sample_gw_floor(1, RngStream(5, 3), -4) == sample_gw_floor(1, RngStream(5, 3), -4)


def test_gw_floor_censors_instead_of_raising(rng_factory):
    results = [sample_gw_floor(0, rng_factory(stream), -5, cap=1) for stream in range(50)]
    assert any(r.censored for r in results)
    assert all(r.low == 0 and r.nodes == 1 for r in results)


def test_gw_floor_deficit_tail():
    rng = RngStream(34, 0)
    n = 3000
    lows = [sample_gw_floor(0, rng, -2, cap=100_000) for _ in range(n)]
    assert sum(1 for r in lows if r.censored) <= n // 100
    for m in (1, 2):
        hits = sum(1 for r in lows if r.low <= -m)
        assert _close(hits, n, float(delta_tail(m))), m


def test_excursion_floor_edges(rng_factory):
    assert sample_excursion_floor(rng_factory(0), 0) == LabelFloor(0, 1)
    for stream in range(30):
        res = sample_excursion_floor(rng_factory(stream), -3, cap=100_000)
        assert -3 <= res.low <= 0
    capped = [sample_excursion_floor(rng_factory(stream), -50, cap=2) for stream in range(30)]
    assert any(r.censored for r in capped)


def test_excursion_floor_matches_kesten_forest():
    n = 800
    rng = RngStream(35, 0)
    direct = sum(1 for _ in range(n) if sample_excursion_floor(rng, -1, cap=100_000).low <= -1)
    rng = RngStream(35, 1)
    hits = total = 0
    for _ in range(n):
        try:
            st = sample_kesten_truncated(SpineHitsLevel(1), rng, cap=100_000, prune_below=-1)
        except ResourceCap:
            continue
        total += 1
        hits += prime_deficits(st, 1)[0] >= 1
    p1, p2 = direct / n, hits / total
    pooled = (direct + hits) / (n + total)
    assert abs(p1 - p2) <= 4 * math.sqrt(pooled * (1 - pooled) * (1 / n + 1 / total))
