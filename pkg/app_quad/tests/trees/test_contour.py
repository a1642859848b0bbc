import pytest

from app_quad.errors import MalformedContour
from app_quad.trees.contour import ContourPair, contour_decode, contour_encode, corner_sequence, forest_contour
from app_quad.trees.labeled_tree import LabeledTree


# ---------- контур одного дерева ----------

def test_encode_small_tree(small_tree):
    cp = contour_encode(small_tree)
    assert cp.C == (0, 1, 0, 1, 2, 1, 0)
    assert cp.V == (0, -1, 0, 0, 1, 0, 0)
    assert contour_decode(cp) == small_tree


def test_single_vertex():
    cp = contour_encode(LabeledTree.single(3))
    assert cp.C == (0,) and cp.V == (3,)
    assert contour_decode(cp).size == 0


@pytest.mark.parametrize(
    "C, V",
    [
        ((0, 1), (0, 0)),
        ((0, 2, 0), (0, 0, 0)),
        ((0, 1, 0), (0, 2, 0)),
        ((0, 1, 0), (0, 1, 1)),
        ((1, 0, 1), (0, 0, 0)),
    ],
)
def test_malformed_contour(C, V):
    with pytest.raises(MalformedContour):
        contour_decode(ContourPair(C, V))


# ---------- леса ----------

def test_forest_of_two_points():
    fc = forest_contour([0, -1], [LabeledTree.single(0), LabeledTree.single(-1)])
    assert fc.C == (0, -1)
    assert fc.V == (0, 0)
    assert fc.V_abs == (0, -1)
    assert fc.starts == (0, 1)


def test_forest_absolute_labels(small_tree):
    second = LabeledTree.single(1)
    fc = forest_contour([0, 1], [small_tree, second])
    assert fc.starts == (0, 7)
    assert fc.C[fc.starts[1]] == -1
    assert fc.V_abs[:7] == contour_encode(small_tree).V
    assert fc.V_abs[7] == 1


def test_forest_root_label_mismatch(small_tree):
    with pytest.raises(ValueError):
        forest_contour([1], [small_tree])


# ---------- углы ----------

def test_corner_sequence(small_tree):
    corners = corner_sequence(small_tree)
    assert len(corners) == 2 * small_tree.size
    assert [c.vertex for c in corners] == [0, 1, 0, 2, 3, 2]
    assert corner_sequence(LabeledTree.single(0)) == []
