"""
Обратное отображение Φ⁻¹: отмеченная квадрангуляция → (помеченное дерево, η).

Метки — расстояния до ρ. Каждая грань даёт одно ребро дерева (см. augmented),
рёбра покрывают все вершины, кроме ρ. Корень дерева — конец корневого ребра
с большей меткой; порядок детей восстанавливается обходом секторов по часовой
стрелке, начиная от сектора корневой дуги (у корня) или от сектора ребра к
родителю (у остальных вершин).
"""
from __future__ import annotations

from typing import Dict, List, Tuple, Union

from app_quad.errors import NotQuadrangulation
from app_quad.maps.rooted_map import RootedMap, graph_distance
from app_quad.schaeffer.augmented import face_tree_edges
from app_quad.schaeffer.construct import PointedQuadrangulation
from app_quad.trees.labeled_tree import LabeledTree


def _validate(m: RootedMap, dist) -> None:
    for cyc in m.face_cycles:
        if len(cyc) != 4:
            raise NotQuadrangulation(f"face of degree {len(cyc)}")
    if (dist < 0).any():
        raise NotQuadrangulation("map is not connected")
    for d in range(m.n_darts):
        if abs(int(dist[m.tail(d)]) - int(dist[m.head(d)])) != 1:
            raise NotQuadrangulation("map is not bipartite")


def phi_inverse_finite(pq: Union[PointedQuadrangulation, Tuple[RootedMap, int]]) -> Tuple[LabeledTree, int]:
    if isinstance(pq, PointedQuadrangulation):
        m, rho = pq.quad, pq.pointed
    else:
        m, rho = pq
    dist = graph_distance(m, rho)
    _validate(m, dist)
    labels = dist.tolist()

    tree_at: Dict[int, Tuple[int, int]] = {}
    for e in face_tree_edges(m, labels):
        tree_at[e.sector_u] = (e.v, e.sector_v)
        tree_at[e.sector_v] = (e.u, e.sector_u)

    root = m.root
    tail, head = m.root_tail, m.root_head
    if labels[tail] > labels[head]:
        r0, eta, e0 = tail, 0, root
    else:
        r0, eta, e0 = head, 1, int(m.twin[root])
    sigma_inv = m.sigma_inv.tolist()

    def children(v: int, start: int, is_root: bool) -> List[Tuple[int, int]]:
        out = []
        x = start
        for _ in range(m.degree(v) if is_root else m.degree(v) - 1):
            x = sigma_inv[x]
            if x in tree_at:
                out.append(tree_at[x])
        return out

    # прямой порядок обхода: номер вершины дерева = позиция в order
    order: List[int] = []
    kids: Dict[int, List[int]] = {}
    stack = [(r0, e0, True)]
    while stack:
        v, start, is_root = stack.pop()
        if v in kids:
            raise NotQuadrangulation("face edges contain a cycle")
        order.append(v)
        ch = children(v, start, is_root)
        kids[v] = [w for w, _ in ch]
        stack.extend((w, s, False) for w, s in reversed(ch))

    if len(order) != m.n_vertices - 1 or rho in kids:
        raise NotQuadrangulation("face edges do not form a spanning tree of q minus the pointed vertex")
    idx = {v: i for i, v in enumerate(order)}
    base = labels[r0]
    tree = LabeledTree.from_lists(
        [[idx[w] for w in kids[v]] for v in order],
        [labels[v] - base for v in order],
    )
    return tree, eta
