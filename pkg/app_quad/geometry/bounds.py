"""Нижние оценки расстояний по меткам: тривиальная и «кактусная»."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from app_quad.maps.rooted_map import graph_distance
from app_quad.schaeffer.construct import SINK_VERTEX, PointedQuadrangulation
from app_quad.trees.labeled_tree import LabeledTree, tree_path


@dataclass(frozen=True)
class BoundReport:
    pairs: int
    trivial_violations: Tuple[Tuple[int, int], ...]
    cactus_violations: Tuple[Tuple[int, int], ...]
    distance_identity_violations: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not (self.trivial_violations or self.cactus_violations or self.distance_identity_violations)


def check_distance_bounds(pq: PointedQuadrangulation, tree: LabeledTree) -> BoundReport:
    """
    Для всех пар вершин дерева: d(a,b) ≥ |ℓ(a) − ℓ(b)| и
    d(a,b) ≥ ℓ(a) + ℓ(b) − 2·min ℓ на [[a, b]]. Заодно d(v, ρ) = ℓ(v) − min ℓ + 1.
    """
    m = pq.quad
    labels = pq.labels
    to_tree = pq.tree_vertex
    lowest = tree.min_label
    dist_rho = pq.distances
    identity_bad = tuple(
        v for v in range(m.n_vertices)
        if to_tree[v] != SINK_VERTEX and int(dist_rho[v]) != labels[v] - lowest + 1
    )
    verts = [v for v in range(m.n_vertices) if to_tree[v] != SINK_VERTEX]
    D = np.stack([graph_distance(m, v) for v in verts])
    trivial: List[Tuple[int, int]] = []
    cactus: List[Tuple[int, int]] = []
    pairs = 0
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            b = verts[j]
            d = int(D[i, b])
            pairs += 1
            if d < abs(labels[a] - labels[b]):
                trivial.append((a, b))
            low = min(tree.labels[x] for x in tree_path(tree, to_tree[a], to_tree[b]))
            if d < labels[a] + labels[b] - 2 * low:
                cactus.append((a, b))
    return BoundReport(pairs, tuple(trivial), tuple(cactus), identity_bad)


def geodesic_pairs_cactus(
    pq: PointedQuadrangulation, tree: LabeledTree, cap: Optional[int] = None
) -> Tuple[Tuple[int, int, Tuple[int, ...]], ...]:
    """
    Проверка «кактусного» перехода: каждая геодезическая a → b заходит в вершину
    с меткой не больше min ℓ на [[a, b]]. Возвращает нарушения (a, b, путь).
    """
    from app_quad.geometry.enumerate_paths import enumerate_geodesics

    m = pq.quad
    labels = pq.labels
    to_tree = pq.tree_vertex
    verts = [v for v in range(m.n_vertices) if to_tree[v] != SINK_VERTEX]
    bad: List[Tuple[int, int, Tuple[int, ...]]] = []
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            low = min(tree.labels[x] for x in tree_path(tree, to_tree[a], to_tree[b]))
            for path in enumerate_geodesics(m, a, b, cap=cap):
                if min(labels[v] for v in path) > low:
                    bad.append((a, b, path))
    return tuple(bad)
