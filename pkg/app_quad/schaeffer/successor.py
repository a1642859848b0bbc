"""
Отображение последователя 𝒮 на углах дерева.

𝒮(c) — первый угол после c (в порядке обхода), метка которого на единицу
меньше. Соседние углы отличаются по метке не больше чем на 1, поэтому это
ближайший справа меньший элемент; он считается одним проходом со стеком.
В конечном дереве поиск циклический, и у углов минимальной метки
последователь — дополнительная вершина ∂. В окне дерева со спиной поиск
линейный по ℤ, а не найденный в окне последователь — ошибка окна.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from app_quad.errors import WindowExhausted
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineTree


class _Sink:
    __slots__ = ()

    def __repr__(self) -> str:
        return "∂"


SINK = _Sink()

UNRESOLVED = -1


def next_smaller(values: Sequence[int], cyclic: bool) -> List[int]:
    """Для каждой позиции — позиция первого строго меньшего значения справа, иначе -1."""
    n = len(values)
    out = [UNRESOLVED] * n
    stack: List[int] = []
    for j in range(2 * n if cyclic else n):
        x = values[j % n]
        while stack and values[stack[-1]] > x:
            out[stack.pop()] = j % n
        if j < n:
            stack.append(j)
    return out


@dataclass(frozen=True)
class SuccessorTable:
    """
    target[p] — позиция последователя угла в позиции p (или -1).
    Позиция угла с индексом i равна i + offset.
    """
    labels: np.ndarray
    target: np.ndarray
    cyclic: bool
    offset: int = 0

    @classmethod
    def of_tree(cls, tree: Union[LabeledTree, SpineTree]) -> "SuccessorTable":
        if isinstance(tree, SpineTree):
            w = tree.window
            labels = w.position_label
            return cls(labels, np.asarray(next_smaller(labels.tolist(), cyclic=False), dtype=np.int64),
                       cyclic=False, offset=w.offset)
        visits = tree.visit_sequence[:-1]
        labels = np.asarray([tree.labels[v] for v in visits], dtype=np.int64)
        return cls(labels, np.asarray(next_smaller(labels.tolist(), cyclic=True), dtype=np.int64), cyclic=True)

    def __len__(self) -> int:
        return int(self.labels.shape[0])

    def successor(self, corner: int):
        p = corner + self.offset
        if not 0 <= p < len(self):
            raise WindowExhausted(corner, f"corner {corner} is outside the window")
        t = int(self.target[p])
        if t >= 0:
            return t - self.offset
        if self.cyclic:
            return SINK
        raise WindowExhausted(corner)

    def label(self, corner: int) -> int:
        return int(self.labels[corner + self.offset])


def successor(tree: Union[LabeledTree, SpineTree], corner: int):
    """𝒮(corner) для конечного дерева (угол или SINK) или для окна (угол ℤ)."""
    return SuccessorTable.of_tree(tree).successor(corner)


def iterate_successor(table: SuccessorTable, corner: int, steps: int) -> List[int]:
    """c, 𝒮(c), …, 𝒮^{steps}(c); WindowExhausted, если цепочка выходит из окна."""
    out = [corner]
    for _ in range(steps):
        nxt = table.successor(out[-1])
        if nxt is SINK:
            raise WindowExhausted(out[-1], "successor chain reached the sink")
        out.append(nxt)
    return out
