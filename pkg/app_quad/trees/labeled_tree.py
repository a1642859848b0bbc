"""
Плоские деревья с целочисленными метками (формализм Неве).

Хранение — арена: вершина 0 — корень, у каждой вершины упорядоченный
список детей и метка. Метки соседних вершин отличаются не больше чем на 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from app_quad.errors import MalformedTree


@dataclass(frozen=True, eq=False)
class LabeledTree:
    children: Tuple[Tuple[int, ...], ...]
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.children) != len(self.labels) or not self.labels:
            raise MalformedTree("children and labels must describe at least the root")

    # ---- конструкторы ----

    @classmethod
    def from_lists(cls, children: Sequence[Sequence[int]], labels: Sequence[int], check: bool = True) -> "LabeledTree":
        tree = cls(tuple(tuple(int(c) for c in ch) for ch in children), tuple(int(x) for x in labels))
        if check:
            tree.check()
        return tree

    @classmethod
    def single(cls, label: int = 0) -> "LabeledTree":
        return cls(((),), (int(label),))

    def check(self) -> "LabeledTree":
        n = len(self.labels)
        seen = [False] * n
        seen[0] = True
        count = 1
        stack = [0]
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                if not 0 < c < n or seen[c]:
                    raise MalformedTree(f"vertex {c} is not a fresh child of {v}")
                if abs(self.labels[c] - self.labels[v]) > 1:
                    raise MalformedTree(f"label jump {self.labels[v]} -> {self.labels[c]} on edge {v}-{c}")
                seen[c] = True
                count += 1
                stack.append(c)
        if count != n:
            raise MalformedTree("arena contains vertices unreachable from the root")
        return self

    # ---- размеры и структура ----

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        """|θ| — число рёбер."""
        return len(self.labels) - 1

    @property
    def root_label(self) -> int:
        return self.labels[0]

    @cached_property
    def parent(self) -> Tuple[int, ...]:
        out = [-1] * self.n_vertices
        for v, ch in enumerate(self.children):
            for c in ch:
                out[c] = v
        return tuple(out)

    @cached_property
    def depth(self) -> Tuple[int, ...]:
        out = [0] * self.n_vertices
        for v in self.preorder():
            for c in self.children[v]:
                out[c] = out[v] + 1
        return tuple(out)

    @property
    def height(self) -> int:
        return max(self.depth)

    @property
    def min_label(self) -> int:
        return min(self.labels)

    def preorder(self) -> Iterator[int]:
        stack = [0]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(self.children[v]))

    @cached_property
    def visit_sequence(self) -> Tuple[int, ...]:
        """Полная последовательность посещений обхода в глубину, длина 2|θ|+1."""
        out = [0]
        stack = [(0, 0)]
        while stack:
            v, i = stack[-1]
            ch = self.children[v]
            if i < len(ch):
                stack[-1] = (v, i + 1)
                stack.append((ch[i], 0))
                out.append(ch[i])
            else:
                stack.pop()
                if stack:
                    out.append(stack[-1][0])
        return tuple(out)

    def subtree(self, v: int) -> "LabeledTree":
        """Поддерево потомков v (метки сохраняются)."""
        order = []
        stack = [v]
        while stack:
            u = stack.pop()
            order.append(u)
            stack.extend(reversed(self.children[u]))
        idx = {u: i for i, u in enumerate(order)}
        return LabeledTree(
            tuple(tuple(idx[c] for c in self.children[u]) for u in order),
            tuple(self.labels[u] for u in order),
        )

    def shift_labels(self, delta: int) -> "LabeledTree":
        return LabeledTree(self.children, tuple(x + delta for x in self.labels))

    def normalized(self) -> "LabeledTree":
        """Перенумерация вершин в прямом порядке обхода."""
        return self.subtree(0)

    # ---- сравнение ----

    @cached_property
    def key(self) -> str:
        from app_quad.trees.treefile import dumps_tree

        return dumps_tree(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"LabeledTree({self.key})" if self.size < 20 else f"LabeledTree(|θ|={self.size}, root={self.root_label})"


# ---- Пути и шары ----

def tree_path(tree: LabeledTree, a: int, b: int) -> List[int]:
    """Единственный путь [[a, b]] через ближайшего общего предка."""
    depth = tree.depth
    parent = tree.parent
    left, right = [a], [b]
    x, y = a, b
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    right.pop()
    return left + right[::-1]


def nearest_common_ancestor(tree: LabeledTree, a: int, b: int) -> int:
    path = tree_path(tree, a, b)
    depth = tree.depth
    return min(path, key=lambda v: depth[v])


def tree_ball(tree: LabeledTree, h: int) -> LabeledTree:
    """Помеченное поддерево из вершин глубины ≤ h."""
    if h < 0:
        raise ValueError("height must be non-negative")
    depth = tree.depth
    order = [v for v in tree.preorder() if depth[v] <= h]
    idx = {u: i for i, u in enumerate(order)}
    return LabeledTree(
        tuple(tuple(idx[c] for c in tree.children[u] if depth[c] <= h) for u in order),
        tuple(tree.labels[u] for u in order),
    )


def tree_local_distance(t1: LabeledTree, t2: LabeledTree) -> Fraction:
    """d_T(θ, θ') = (1 + sup{h : B_h(θ) = B_h(θ')})^{-1}; равные деревья — 0."""
    if t1 == t2:
        return Fraction(0)
    last: Optional[int] = None
    h = 0
    while tree_ball(t1, h) == tree_ball(t2, h):
        last = h
        h += 1
    return Fraction(1, 1 + (last or 0))
