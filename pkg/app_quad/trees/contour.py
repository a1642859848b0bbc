"""
Контурные функции деревьев и лесов, последовательности углов.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from app_quad.errors import MalformedContour
from app_quad.trees.labeled_tree import LabeledTree


@dataclass(frozen=True)
class ContourPair:
    C: Tuple[int, ...]
    V: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.C)


@dataclass(frozen=True)
class ForestContour:
    C: Tuple[int, ...]
    V: Tuple[int, ...]
    V_abs: Tuple[int, ...]
    starts: Tuple[int, ...]  # κ_i — индекс первого угла i-го дерева


@dataclass(frozen=True, order=True)
class Corner:
    index: int
    vertex: int


def contour_encode(tree: LabeledTree) -> ContourPair:
    visits = tree.visit_sequence
    depth = tree.depth
    labels = tree.labels
    return ContourPair(tuple(depth[v] for v in visits), tuple(labels[v] for v in visits))


def contour_decode(cp: ContourPair) -> LabeledTree:
    C, V = list(cp.C), list(cp.V)
    if len(C) != len(V) or not C or len(C) % 2 == 0:
        raise MalformedContour("contour must have odd length 2n+1 with matching labels")
    if C[0] != 0 or C[-1] != 0:
        raise MalformedContour("contour must start and end at height 0")
    children: List[List[int]] = [[]]
    labels = [V[0]]
    stack = [0]
    for k in range(1, len(C)):
        step = C[k] - C[k - 1]
        if step == 1:
            v = len(labels)
            if abs(V[k] - labels[stack[-1]]) > 1:
                raise MalformedContour(f"label jump at position {k}")
            children[stack[-1]].append(v)
            children.append([])
            labels.append(V[k])
            stack.append(v)
        elif step == -1:
            if C[k] < 0:
                raise MalformedContour(f"contour goes below zero at position {k}")
            stack.pop()
            if V[k] != labels[stack[-1]]:
                raise MalformedContour(f"label at return {k} disagrees with the parent label")
        else:
            raise MalformedContour(f"contour step {step} at position {k}")
    return LabeledTree.from_lists(children, labels, check=False)


def forest_contour(roots_labels: Sequence[int], trees: Sequence[LabeledTree]) -> ForestContour:
    """
    Контур леса: дерево i занимает блок длины 2|θ_i|+1 и сдвинуто на −i,
    так что C(κ_i) = −i. V — метки относительно корня дерева,
    V′(n) = X_{−C̲(n)} + V(n) — абсолютные метки.
    """
    if len(roots_labels) != len(trees):
        raise ValueError("one root label per tree is required")
    C: List[int] = []
    V: List[int] = []
    starts: List[int] = []
    for i, (x, tree) in enumerate(zip(roots_labels, trees)):
        if tree.root_label != x:
            raise ValueError(f"tree {i} has root label {tree.root_label}, expected {x}")
        cp = contour_encode(tree)
        starts.append(len(C))
        C.extend(c - i for c in cp.C)
        V.extend(v - x for v in cp.V)
    running_min = np.minimum.accumulate(np.asarray(C, dtype=np.int64)) if C else np.zeros(0, dtype=np.int64)
    X = list(roots_labels)
    V_abs = tuple(X[-int(m)] + v for m, v in zip(running_min, V))
    return ForestContour(tuple(C), tuple(V), V_abs, tuple(starts))


def corner_sequence(tree) -> List[Corner]:
    """
    Углы в порядке обхода по часовой стрелке: 2|θ| углов у конечного дерева,
    двусторонняя нумерация по ℤ у окна дерева со спиной.
    """
    from app_quad.trees.spine import SpineTree

    if isinstance(tree, SpineTree):
        w = tree.window
        return [Corner(i, w.vertex_at(i)) for i in range(w.first_index, w.last_index + 1)]
    visits = tree.visit_sequence
    return [Corner(i, visits[i]) for i in range(len(visits) - 1)] if tree.size else []
