"""
Усечённые деревья со спиной (элементы 𝒮) и их окно углов.

Спина — метки X_0..X_K, к вершине S(n) слева прикреплено дерево L_n, справа R_n
(оба с корнем S(n) и меткой X_n). Окно перечисляет углы по ℤ:
левые индексы i ≥ 0 — полные обходы L_0, L_1, …, затем угол прихода в S(K);
правые i < 0 — обращённые обходы R_0, R_1, … (угол c_0 общий).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from app_quad.errors import ConfigError, MalformedTree
from app_quad.trees.labeled_tree import LabeledTree


# ---- Правила остановки ----

@dataclass(frozen=True)
class SpineSteps:
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ConfigError("SpineSteps requires K ≥ 1")

    def reached(self, spine: List[int]) -> bool:
        return len(spine) - 1 >= self.steps


@dataclass(frozen=True)
class SpineHitsLevel:
    """Остановка в σ_M — первом n с X_n = −M (уровень передаётся как M ≥ 1)."""
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ConfigError("SpineHitsLevel requires M ≥ 1")

    def reached(self, spine: List[int]) -> bool:
        return spine[-1] == -self.level


StopRule = Union[SpineSteps, SpineHitsLevel]

SIDE_SPINE, SIDE_LEFT, SIDE_RIGHT = 0, 1, 2


@dataclass(frozen=True, eq=False)
class SpineTree:
    spine: Tuple[int, ...]
    left: Tuple[LabeledTree, ...]
    right: Tuple[LabeledTree, ...]
    stop: StopRule

    def __post_init__(self):
        K = len(self.spine) - 1
        if K < 1 or self.spine[0] != 0:
            raise MalformedTree("spine must start at label 0 and have at least one step")
        if len(self.left) != K or len(self.right) != K:
            raise MalformedTree("one left and one right subtree per spine step")
        for n in range(K):
            if abs(self.spine[n + 1] - self.spine[n]) > 1:
                raise MalformedTree(f"spine step {n} is not in {{-1,0,1}}")
            if self.left[n].root_label != self.spine[n] or self.right[n].root_label != self.spine[n]:
                raise MalformedTree(f"subtrees at spine vertex {n} must carry its label")

    @property
    def K(self) -> int:
        return len(self.spine) - 1

    @property
    def vertex_count(self) -> int:
        return self.K + 1 + sum(t.size for t in self.left) + sum(t.size for t in self.right)

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    def first_hit(self, level: int) -> Optional[int]:
        """σ_level: первый n с X_n = −level, если он в окне."""
        target = -level
        for n, x in enumerate(self.spine):
            if x == target:
                return n
        return None

    def restrict(self, stop: StopRule) -> "SpineTree":
        """Префикс до момента остановки stop (должен наступить внутри окна)."""
        spine = []
        for x in self.spine:
            spine.append(x)
            if len(spine) > 1 and stop.reached(spine):
                K = len(spine) - 1
                return SpineTree(tuple(spine), self.left[:K], self.right[:K], stop)
        raise ConfigError(f"stop rule {stop} is not reached inside the window")

    @cached_property
    def window(self) -> "SpineWindow":
        return SpineWindow.build(self)

    def as_labeled_tree(self) -> LabeledTree:
        """Конечное дерево окна: у S(n) сначала левые дети, затем спина, затем правые."""
        w = self.window
        order = []
        stack = [w.spine_vertex[0]]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(w.children[v]))
        idx = {v: i for i, v in enumerate(order)}
        return LabeledTree(
            tuple(tuple(idx[c] for c in w.children[v]) for v in order),
            tuple(w.labels[v] for v in order),
        )


@dataclass(frozen=True, eq=False)
class SpineWindow:
    labels: Tuple[int, ...]
    parent: Tuple[int, ...]
    children: Tuple[Tuple[int, ...], ...]
    side: Tuple[int, ...]
    block: Tuple[int, ...]
    spine_vertex: Tuple[int, ...]
    left: Tuple[int, ...]        # вершина левого угла i (i ≥ 0)
    right: Tuple[int, ...]       # right[m] — вершина угла −m (right[0] — c_0)
    left_block_end: Tuple[int, ...]   # последний левый индекс блока L_n
    right_block_end: Tuple[int, ...]  # последний (самый отрицательный) индекс блока R_n

    @classmethod
    def build(cls, st: SpineTree) -> "SpineWindow":
        K = st.K
        labels: List[int] = []
        parent: List[int] = []
        children: List[List[int]] = []
        side: List[int] = []
        block: List[int] = []

        def new_vertex(label: int, par: int, sd: int, blk: int) -> int:
            v = len(labels)
            labels.append(label)
            parent.append(par)
            children.append([])
            side.append(sd)
            block.append(blk)
            return v

        spine_vertex = []
        for n in range(K + 1):
            spine_vertex.append(new_vertex(st.spine[n], spine_vertex[-1] if n else -1, SIDE_SPINE, n))

        left: List[int] = []
        right: List[int] = []
        left_end: List[int] = []
        right_end: List[int] = []
        for n in range(K):
            s = spine_vertex[n]
            maps: Dict[int, Dict[int, int]] = {}
            for sd, tree in ((SIDE_LEFT, st.left[n]), (SIDE_RIGHT, st.right[n])):
                gid = {0: s}
                for v in tree.preorder():
                    for c in tree.children[v]:
                        gid[c] = new_vertex(tree.labels[c], gid[v], sd, n)
                maps[sd] = gid
            lt, rt = st.left[n], st.right[n]
            gl, gr = maps[SIDE_LEFT], maps[SIDE_RIGHT]
            children[s] = ([gl[c] for c in lt.children[0]] + [spine_vertex[n + 1]]
                           + [gr[c] for c in rt.children[0]])
            for sd, tree, gid in ((SIDE_LEFT, lt, gl), (SIDE_RIGHT, rt, gr)):
                for v in range(1, tree.n_vertices):
                    children[gid[v]] = [gid[c] for c in tree.children[v]]
            left.extend(gl[v] for v in lt.visit_sequence)
            left_end.append(len(left) - 1)
            right.extend(gr[v] for v in reversed(rt.visit_sequence))
            right_end.append(-(len(right) - 1))
        left.append(spine_vertex[K])

        return cls(
            labels=tuple(labels),
            parent=tuple(parent),
            children=tuple(tuple(c) for c in children),
            side=tuple(side),
            block=tuple(block),
            spine_vertex=tuple(spine_vertex),
            left=tuple(left),
            right=tuple(right),
            left_block_end=tuple(left_end),
            right_block_end=tuple(right_end),
        )

    # ---- индексы углов ----

    @property
    def first_index(self) -> int:
        return -(len(self.right) - 1)

    @property
    def last_index(self) -> int:
        return len(self.left) - 1

    @property
    def offset(self) -> int:
        """Сдвиг: позиция p = i + offset нумерует углы окна с нуля."""
        return len(self.right) - 1

    @property
    def n_corners(self) -> int:
        return len(self.left) + len(self.right) - 1

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def vertex_at(self, i: int) -> int:
        return self.left[i] if i >= 0 else self.right[-i]

    def label_at(self, i: int) -> int:
        return self.labels[self.vertex_at(i)]

    @cached_property
    def position_vertex(self) -> np.ndarray:
        arr = np.asarray(list(reversed(self.right[1:])) + list(self.left), dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def position_label(self) -> np.ndarray:
        arr = np.asarray(self.labels, dtype=np.int64)[self.position_vertex]
        arr.flags.writeable = False
        return arr

    @cached_property
    def corners_of(self) -> Tuple[Tuple[int, ...], ...]:
        """ℤ-индексы углов каждой вершины по возрастанию."""
        out: List[List[int]] = [[] for _ in self.labels]
        off = self.offset
        for p, v in enumerate(self.position_vertex.tolist()):
            out[v].append(p - off)
        return tuple(tuple(c) for c in out)

    @cached_property
    def last_left_corner(self) -> Tuple[int, ...]:
        """Последний левый угол вершины; -1, если левых углов нет."""
        out = [-1] * self.n_vertices
        for i, v in enumerate(self.left):
            out[v] = i
        return tuple(out)

    def is_spine(self, v: int) -> bool:
        return self.side[v] == SIDE_SPINE

    def ancestors(self, v: int) -> List[int]:
        """Путь [[∅, v]] в дереве окна, от корня к v."""
        path = [v]
        while self.parent[path[-1]] >= 0:
            path.append(self.parent[path[-1]])
        return path[::-1]

    def descendants(self, v: int) -> List[int]:
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children[u]))
        return out
