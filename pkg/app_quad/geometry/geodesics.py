"""
Геодезические, построенные по последователям в окне дерева со спиной.

γ_max — итерации последователя от угла c₀; γ_min — на каждом шаге берётся
последний левый угол текущей вершины. Множество встреч R и множество
касаний спины R′ выражаются через дефициты срезанных деревьев:

    R  = ℤ₊ ∖ ⋃_j (j, j + Δ_j],     R′ = ℤ₊ ∖ ⋃_m (m, m + Δ′_m].
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app_quad.errors import SpineHitsUnresolved, WindowExhausted
from app_quad.schaeffer.successor import SuccessorTable, iterate_successor
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineTree

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeodesicPath:
    vertices: Tuple[int, ...]
    corners: Tuple[int, ...] = ()

    @property
    def steps(self) -> int:
        return len(self.vertices) - 1

    def __getitem__(self, i: int) -> int:
        return self.vertices[i]

    def __len__(self) -> int:
        return len(self.vertices)


def is_proper(path: Sequence[int], labels) -> bool:
    """ℓ(γ(i)) = ℓ(γ(0)) − i вдоль всего пути."""
    start = labels[path[0]]
    return all(labels[v] == start - i for i, v in enumerate(path))


def maximal_geodesic(st: SpineTree, from_corner: int = 0, steps: int = 0,
                     table: Optional[SuccessorTable] = None) -> GeodesicPath:
    """γ(i) = 𝒱(𝒮⁽ⁱ⁾(c)) для i ≤ steps."""
    w = st.window
    table = table or SuccessorTable.of_tree(st)
    chain = iterate_successor(table, from_corner, steps)
    return GeodesicPath(tuple(w.vertex_at(c) for c in chain), tuple(chain[:-1]))


def minimal_geodesic(st: SpineTree, steps: int, table: Optional[SuccessorTable] = None) -> GeodesicPath:
    """
    γ_min: из вершины выходим через её последний левый угол. Поиск идёт только
    по левым углам, так что путь не пересекает спину.
    """
    w = st.window
    table = table or SuccessorTable.of_tree(st)
    v = w.spine_vertex[0]
    vertices = [v]
    corners: List[int] = []
    for _ in range(steps):
        c = w.last_left_corner[v]
        if c < 0:
            raise WindowExhausted(None, f"vertex {v} has no left corner in the window")
        nxt = table.successor(c)
        corners.append(c)
        v = w.vertex_at(nxt)
        vertices.append(v)
    return GeodesicPath(tuple(vertices), tuple(corners))


# ---------- множества встреч ----------

@dataclass(frozen=True)
class MeetingSets:
    R: Tuple[int, ...]
    R_prime: Tuple[int, ...]
    horizon: int

    def density(self) -> float:
        return len(self.R) / (self.horizon + 1)


def meeting_sets(st: SpineTree, horizon: int) -> MeetingSets:
    table = SuccessorTable.of_tree(st)
    gmax = maximal_geodesic(st, 0, horizon, table)
    gmin = minimal_geodesic(st, horizon, table)
    w = st.window
    R = tuple(i for i in range(horizon + 1) if gmax[i] == gmin[i])
    Rp = tuple(i for i in range(horizon + 1) if w.is_spine(gmax[i]))
    return MeetingSets(R, Rp, horizon)


def set_from_deficits(deficits: Sequence[int], horizon: int) -> Tuple[int, ...]:
    """ℤ₊ ∩ [0, horizon] без объединения интервалов (j, j + Δ_j]."""
    cover = np.zeros(horizon + 2, dtype=np.int64)
    for j, d in enumerate(deficits):
        if d <= 0 or j >= horizon:
            continue
        cover[j + 1] += 1
        cover[min(j + d, horizon) + 1] -= 1
    covered = np.cumsum(cover)[: horizon + 1]
    return tuple(int(i) for i in np.flatnonzero(covered == 0))


# ---------- срезанные деревья ----------

@dataclass(frozen=True)
class ChoppedTrees:
    trees: Tuple[LabeledTree, ...]
    deficits: Tuple[int, ...]
    prime_deficits: Tuple[int, ...]


def _window_subtree(st: SpineTree, v: int) -> LabeledTree:
    w = st.window
    if w.is_spine(v):
        return st.left[w.block[v]]
    order = w.descendants(v)
    idx = {u: i for i, u in enumerate(order)}
    return LabeledTree(
        tuple(tuple(idx[c] for c in w.children[u]) for u in order),
        tuple(w.labels[u] for u in order),
    )


def prime_deficits(st: SpineTree, count: int) -> Tuple[int, ...]:
    """Δ′_m = −m − min ℓ по лесу L_{σ_m}, …, L_{σ_{m+1}−1}, σ_0 = 0."""
    out = []
    for m in range(count):
        lo = 0 if m == 0 else st.first_hit(m)
        hi = st.first_hit(m + 1)
        if lo is None or hi is None:
            raise WindowExhausted(None, f"spine does not reach level -{m + 1} inside the window")
        low = min(st.left[i].min_label for i in range(lo, hi))
        out.append(max(0, -m - low))
    return tuple(out)


def chopped_trees(st: SpineTree, count: int) -> ChoppedTrees:
    """A_i — γ_min(i) с потомками (L_j, если γ_min(i) = S(j)); Δ_i = −i − min ℓ(A_i)."""
    gmin = minimal_geodesic(st, max(count - 1, 0))
    trees = tuple(_window_subtree(st, gmin[i]) for i in range(count))
    deficits = tuple(-i - t.min_label for i, t in enumerate(trees))
    return ChoppedTrees(trees, deficits, prime_deficits(st, count))


def exact_meeting_probability(i: int) -> Fraction:
    """P(i ∈ R) = ∏_{j=1}^{i} (1 − 2/((j+1)(j+2))) = (i+3) / (3(i+1))."""
    if i < 0:
        raise ValueError("i must be non-negative")
    p = Fraction(1)
    for j in range(1, i + 1):
        p *= 1 - Fraction(2, (j + 1) * (j + 2))
    return p


def delta_tail(m: int) -> Fraction:
    """P(Δ₀ ≥ m) = 2/((m+1)(m+2)) для m ≥ 1."""
    if m <= 0:
        return Fraction(1)
    return Fraction(2, (m + 1) * (m + 2))


# ---------- точки разреза ----------

@dataclass(frozen=True)
class CutPoints:
    points: Tuple[int, ...]
    times: Tuple[int, ...]
    last_spine_hit: int
    i0: int


def cut_points(st: SpineTree, horizon: int, margin: Optional[float] = None) -> CutPoints:
    """
    Точки {γ_max(i) : i ∈ R, i > i₀}, через которые проходит любая
    собственная геодезическая из ∅. Последнее касание спины i* у γ_min
    считается найденным, только если horizon ≥ margin·max(i*, 1).
    """
    if margin is None:
        from app_quad.lab.config import spine_hit_margin
        margin = spine_hit_margin()
    w = st.window
    table = SuccessorTable.of_tree(st)
    gmin = minimal_geodesic(st, horizon, table)
    gmax = maximal_geodesic(st, 0, horizon, table)
    hits = [i for i in range(horizon + 1) if w.is_spine(gmin[i])]
    i_star = hits[-1]
    if horizon < margin * max(i_star, 1):
        raise SpineHitsUnresolved(f"last spine hit {i_star} is too close to horizon {horizon}")
    c_star = w.corners_of[gmin[i_star]][0]
    labels = w.position_label
    off = w.offset
    i0 = -int(labels[c_star + off: off + 1].min())
    times = tuple(i for i in range(horizon + 1) if gmax[i] == gmin[i] and i > i0)
    return CutPoints(tuple(gmax[i] for i in times), times, i_star, i0)
