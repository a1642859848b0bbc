import pytest

from app_quad.errors import ConfigError, MalformedTree
from app_quad.trees.contour import corner_sequence
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineHitsLevel, SpineSteps, SpineTree
from app_quad.trees.treefile import loads_tree


@pytest.fixture
def one_step():
    # спина 0 → −1, слева лист с меткой 1, справа лист с меткой −1
    return SpineTree((0, -1), (loads_tree("(0 (1))"),), (loads_tree("(0 (-1))"),), SpineHitsLevel(1))


# ---------- проверка формы ----------

def test_sizes(one_step):
    assert one_step.K == 1
    assert one_step.vertex_count == 4
    assert one_step.edge_count == 3
    assert one_step.first_hit(1) == 1
    assert one_step.first_hit(2) is None


def test_bad_spine_step():
    leaf = LabeledTree.single(0)
    with pytest.raises(MalformedTree):
        SpineTree((0, 2), (leaf,), (leaf,), SpineSteps(1))


def test_subtree_label_mismatch():
    with pytest.raises(MalformedTree):
        SpineTree((0, 1), (LabeledTree.single(1),), (LabeledTree.single(0),), SpineSteps(1))


def test_stop_rules_validate():
    with pytest.raises(ConfigError):
        SpineHitsLevel(0)
    with pytest.raises(ConfigError):
        SpineSteps(0)
    assert SpineHitsLevel(2).reached([0, -1, -2])
    assert not SpineHitsLevel(2).reached([0, -1])


# ---------- окно углов ----------

def test_window_indices(one_step):
    w = one_step.window
    assert w.first_index == -2
    assert w.last_index == 3
    assert w.n_corners == 6
    # левая сторона: обход L₀, затем угол прихода в S(1)
    assert [w.label_at(i) for i in range(0, 4)] == [0, 1, 0, -1]
    # правая сторона: обращённый обход R₀
    assert [w.label_at(i) for i in (-1, -2)] == [-1, 0]
    assert w.position_label.tolist() == [0, -1, 0, 1, 0, -1]


def test_window_tree(one_step):
    w = one_step.window
    root = w.spine_vertex[0]
    assert w.is_spine(root)
    assert w.children[root] == (2, 1, 3)
    assert w.ancestors(1) == [0, 1]
    assert sorted(w.descendants(0)) == [0, 1, 2, 3]
    assert one_step.as_labeled_tree().size == 3


def test_corner_sequence_of_window(one_step):
    corners = corner_sequence(one_step)
    assert [c.index for c in corners] == [-2, -1, 0, 1, 2, 3]


def test_restrict():
    leaf0, leafm = LabeledTree.single(0), LabeledTree.single(-1)
    st = SpineTree((0, -1, -2), (leaf0, leafm), (leaf0, leafm), SpineHitsLevel(2))
    short = st.restrict(SpineHitsLevel(1))
    assert short.spine == (0, -1)
    with pytest.raises(ConfigError):
        st.restrict(SpineHitsLevel(3))
