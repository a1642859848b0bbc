"""Полный перебор плоских деревьев и помеченных деревьев малого размера."""
from __future__ import annotations

from itertools import product
from typing import Iterator, List, Tuple

from app_quad.trees.labeled_tree import LabeledTree


def dyck_words(n: int) -> Iterator[Tuple[int, ...]]:
    """Слова Дика длины 2n в лексикографическом порядке (+1 раньше −1)."""
    word: List[int] = []

    def rec(up: int, height: int):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        if up < n:
            word.append(1)
            yield from rec(up + 1, height + 1)
            word.pop()
        if height > 0:
            word.append(-1)
            yield from rec(up, height - 1)
            word.pop()

    yield from rec(0, 0)


def plane_trees(n: int) -> Iterator[LabeledTree]:
    """Все Cat(n) форм деревьев с n рёбрами, все метки нулевые."""
    from app_quad.sampling.samplers import dyck_to_tree

    if n < 0:
        raise ValueError("n must be non-negative")
    for w in dyck_words(n):
        yield dyck_to_tree(w)


def labeled_trees(n: int, root_label: int = 0) -> Iterator[LabeledTree]:
    """Все Cat(n)·3ⁿ деревьев из 𝕋ₙ с меткой корня root_label."""
    from app_quad.sampling.samplers import dyck_to_tree

    for w in dyck_words(n):
        for inc in product((-1, 0, 1), repeat=n):
            yield dyck_to_tree(w, root_label=root_label, increments=list(inc))
