import pytest

from app_quad.errors import LabelParityViolation, MalformedTree
from app_quad.maps.holes import QuadrangulationWithHoles
from app_quad.sampling.enumeration import labeled_trees
from app_quad.sampling.samplers import sample_uniform_tree
from app_quad.schaeffer.augmented import augmented_map
from app_quad.schaeffer.construct import SINK_VERTEX, phi_finite
from app_quad.schaeffer.enumeration import enumerate_quadrangulations, pointed_images
from app_quad.schaeffer.inverse import phi_inverse_finite
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.treefile import loads_tree


# ---------- прямое отображение ----------

def test_single_edge_tree():
    pq = phi_finite(loads_tree("(0 (1))"), 0)
    assert (pq.quad.n_vertices, pq.quad.n_edges, pq.n_faces) == (3, 2, 1)
    assert pq.tree_vertex[pq.pointed] == SINK_VERTEX
    assert sorted(pq.distances.tolist()) == [0, 1, 2]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sizes_and_faces(n):
    for tree, eta, pq in pointed_images(n):
        q = pq.quad
        assert q.n_faces == n
        assert q.n_vertices == n + 2
        assert q.n_edges == 2 * n
        QuadrangulationWithHoles(q).validate()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_labels_are_distances(n):
    # d(v, ∂) = ℓ(v) − min ℓ + 1
    for tree, eta, pq in pointed_images(n):
        low = pq.labels[pq.pointed]
        assert [int(d) for d in pq.distances] == [lab - low for lab in pq.labels]


def test_rejects_bad_input(small_tree):
    with pytest.raises(MalformedTree):
        phi_finite(small_tree.shift_labels(1), 0)
    with pytest.raises(MalformedTree):
        phi_finite(LabeledTree.single(0), 0)
    with pytest.raises(ValueError):
        phi_finite(small_tree, 2)


# ---------- обратное отображение ----------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_inverse_exhaustive(n):
    for tree, eta, pq in pointed_images(n):
        back, back_eta = phi_inverse_finite(pq)
        assert back == tree
        assert back_eta == eta


def test_inverse_random(rng):
    for _ in range(40):
        n = 1 + rng.integers(0, 30)
        tree = sample_uniform_tree(n, rng)
        eta = rng.bit()
        pq = phi_finite(tree, eta)
        back, back_eta = phi_inverse_finite((pq.quad, pq.pointed))
        assert (back, back_eta) == (tree, eta)


def test_augmented_map(small_tree):
    pq = phi_finite(small_tree, 1)
    aug = augmented_map(pq.quad, pq.labels)
    assert len(aug.edges) == pq.n_faces
    assert aug.map.n_edges == pq.quad.n_edges + pq.n_faces
    adj = aug.tree_adjacency()
    assert adj[pq.pointed] == [], "отмеченная вершина не входит в дерево"
    with pytest.raises(LabelParityViolation):
        augmented_map(pq.quad, [0] * pq.quad.n_vertices)


# ---------- подсчёт ----------

@pytest.mark.parametrize("n, count, pointed", [(1, 2, 6), (2, 9, 36), (3, 54, 270)])
def test_enumeration_counts(n, count, pointed):
    res = enumerate_quadrangulations(n)
    assert res.count == count
    assert res.pointed == pointed


def test_enumeration_n4():
    assert enumerate_quadrangulations(4).count == 378


def test_images_are_distinct():
    codes = {pq.code for _, _, pq in pointed_images(2)}
    assert len(codes) == 2 * len(list(labeled_trees(2)))
