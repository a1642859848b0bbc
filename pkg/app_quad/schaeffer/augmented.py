"""
Правила граней обратного отображения и дополненная карта Q̂.

Грань d0 d1 d2 d3 (порядок phi), v_k = tail(d_k); угол грани при v_k —
сектор между twin(d_{k−1}) и sigma(twin(d_{k−1})), ключ сектора — дарт
twin(d_{k−1}).

  * метки (i, i+1, i, i+1): ребро между двумя вершинами с меткой i+1;
  * метки (i, i+1, i+2, i+1): ребро от максимума к следующей за ним вершине.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from app_quad.errors import LabelParityViolation, NotQuadrangulation
from app_quad.maps.holes import MapLike, as_quad
from app_quad.maps.rooted_map import RootedMap, build_map


@dataclass(frozen=True)
class TreeEdge:
    face: int
    u: int
    v: int
    sector_u: int
    sector_v: int


def _check_parity(m: RootedMap, labels: Sequence[int]) -> None:
    for d in range(0, m.n_darts):
        a, b = labels[m.tail(d)], labels[m.head(d)]
        if abs(a - b) != 1:
            raise LabelParityViolation(f"labels {a} and {b} across dart {d} do not differ by 1")


def face_tree_edges(m: RootedMap, labels: Sequence[int], holes: Iterable[int] = ()) -> List[TreeEdge]:
    """Одно ребро дерева на каждую не-дырявую грань степени 4."""
    skip = frozenset(holes)
    out: List[TreeEdge] = []
    for fid, cyc in enumerate(m.face_cycles):
        if fid in skip:
            continue
        if len(cyc) != 4:
            raise NotQuadrangulation(f"face {fid} has degree {len(cyc)}")
        verts = [m.tail(d) for d in cyc]
        lab = [labels[v] for v in verts]
        for k in range(4):
            if abs(lab[k] - lab[k - 1]) != 1:
                raise LabelParityViolation(f"labels {lab} around face {fid} do not alternate by 1")
        top = max(lab)
        peaks = [k for k in range(4) if lab[k] == top]
        sector = [int(m.twin[cyc[k - 1]]) for k in range(4)]
        if len(peaks) == 2:
            a, b = peaks
            out.append(TreeEdge(fid, verts[a], verts[b], sector[a], sector[b]))
        else:
            t = peaks[0]
            s = (t + 1) % 4
            out.append(TreeEdge(fid, verts[t], verts[s], sector[t], sector[s]))
    return out


@dataclass(frozen=True, eq=False)
class AugmentedMap:
    map: RootedMap
    edges: Tuple[TreeEdge, ...]
    # дарт u→v добавленного ребра j — base + 2j, обратный — base + 2j + 1
    base: int

    def added_darts(self) -> Tuple[int, ...]:
        return tuple(range(self.base, self.map.n_darts))

    def tree_adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.map.n_vertices)]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj


def augmented_map(q: MapLike, labels: Sequence[int]) -> AugmentedMap:
    """Q̂: карта q с добавленными рёбрами дерева в каждой внутренней грани."""
    quad = as_quad(q)
    m = quad.map
    _check_parity(m, labels)
    edges = face_tree_edges(m, labels, quad.hole_faces)
    base = m.n_darts
    twin = m.twin.tolist()
    sigma = m.sigma.tolist()
    for j, e in enumerate(edges):
        du, dv = base + 2 * j, base + 2 * j + 1
        twin.extend([dv, du])
        sigma.extend([0, 0])
        sigma[du] = sigma[e.sector_u]
        sigma[e.sector_u] = du
        sigma[dv] = sigma[e.sector_v]
        sigma[e.sector_v] = dv
    return AugmentedMap(build_map(twin, sigma, m.root), tuple(edges), base)
