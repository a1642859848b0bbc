"""
Граница ∂F_{−r} орошара со стороны дерева.

Вершина v лежит в F_{−r}, если все метки на [[∅, v]] больше −r, и в ∂F_{−r},
если ℓ(v) = −r, а все её строгие предки имеют метку больше −r. Поэтому

    |∂F_{−r}| = 1 + Σ_{i<σ_r} |Y_{L_i}(−r)| + Σ_{i<σ_r} |Y_{R_i}(−r)|.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from app_quad.errors import InsufficientCertification, RootTooDeep, WrongTruncation
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import sample_kesten_truncated
from app_quad.schaeffer.augmented import augmented_map
from app_quad.schaeffer.construct import WindowQuadrangulation
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineHitsLevel, SpineTree

log = logging.getLogger(__name__)


def y_count(tree: LabeledTree, r: int) -> int:
    """|Y_θ(−r)|: вершины с меткой −r, у которых все строгие предки выше −r."""
    if tree.root_label <= -r:
        raise RootTooDeep(f"root label {tree.root_label} is not above −{r}")
    count = 0
    stack = [0]
    while stack:
        v = stack.pop()
        lab = tree.labels[v]
        if lab == -r:
            count += 1
            continue
        if lab < -r:
            continue
        stack.extend(tree.children[v])
    return count


@dataclass(frozen=True)
class BoundaryStat:
    r: int
    size: int
    replica: int = 0

    @property
    def rescaled(self) -> float:
        return 2.0 * self.size / (self.r * self.r)


def boundary_size(st: SpineTree, r: int, replica: int = 0) -> BoundaryStat:
    spine = st.spine
    if spine[-1] != -r or any(x <= -r for x in spine[:-1]):
        raise WrongTruncation(f"spine must stop at its first visit to −{r}")
    total = 1
    for lt, rt in zip(st.left, st.right):
        total += y_count(lt, r) + y_count(rt, r)
    return BoundaryStat(r, total, replica)


def sample_boundary_stat(r: int, rng: RngStream, replica: int = 0, cap: Optional[int] = None) -> BoundaryStat:
    """Монте-Карло: дерево Кестена до σ_r, поддеревья обрезаны на уровне −r."""
    st = sample_kesten_truncated(SpineHitsLevel(r), rng, cap=cap, prune_below=-r)
    return boundary_size(st, r, replica)


class Membership:
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def classify_vertex(wq: WindowQuadrangulation, v: int, r: int) -> str:
    """Классификация вершины карты по пути [[∅, v]] в дереве окна."""
    level = -wq.window.labels[wq.window.spine_vertex[-1]]
    if r >= level:
        raise InsufficientCertification(r, level - 1, "window must reach below level −r")
    w = wq.window
    path = w.ancestors(wq.tree_vertex[v])
    if any(w.labels[u] <= -r for u in path[:-1]):
        return Membership.OUTSIDE
    lab = w.labels[path[-1]]
    if lab > -r:
        return Membership.INSIDE
    return Membership.BOUNDARY if lab == -r else Membership.OUTSIDE


@dataclass(frozen=True)
class FloodFill:
    inside: FrozenSet[int]
    boundary: FrozenSet[int]


def flood_fill_boundary(wq: WindowQuadrangulation, r: int) -> FloodFill:
    """
    Связностью в Q̂: F_{−r} — компонента ∅ среди вершин с меткой > −r,
    ∂F_{−r} — вершины с меткой −r, соседние с F_{−r}.
    """
    level = -wq.window.labels[wq.window.spine_vertex[-1]]
    if level < r + 2:
        raise InsufficientCertification(r, level - 2, "flood fill needs the window to reach level r + 2")
    aug = augmented_map(wq.quad, wq.labels).map
    labels = wq.labels
    twin = aug.twin.tolist()
    vof = aug.vertex_of.tolist()
    start = wq.root_vertex
    inside = {start}
    boundary = set()
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for d in aug.darts_out(u):
            x = vof[twin[d]]
            if labels[x] > -r:
                if x not in inside:
                    inside.add(x)
                    queue.append(x)
            elif labels[x] == -r:
                boundary.add(x)
    return FloodFill(frozenset(inside), frozenset(boundary))


def classification_table(wq: WindowQuadrangulation, r: int) -> Dict[int, str]:
    return {v: classify_vertex(wq, v, r) for v in range(wq.map.n_vertices)}
