"""Полный перебор геодезических между двумя вершинами сертифицированного шара."""
from __future__ import annotations

from typing import List, Optional, Tuple

from app_quad.errors import InsufficientCertification, ResourceCap
from app_quad.maps.holes import COMPLETE, MapLike, as_quad
from app_quad.maps.rooted_map import graph_distance


def enumerate_geodesics(q: MapLike, a: int, b: int, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    Все кратчайшие пути a → b как последовательности вершин: обход слоёв
    BFS по вершинам u с d(a, u) + d(u, b) = d(a, b).

    У шара радиуса r расстояния точны, пока d(e*₋, a) + d(a, b) ≤ r − 1.
    """
    quad = as_quad(q)
    m = quad.map
    if cap is None:
        from app_quad.lab.config import geodesic_enum_cap
        cap = geodesic_enum_cap()
    da = graph_distance(m, a)
    d = int(da[b])
    if d < 0:
        raise InsufficientCertification(0, quad.certified_radius, f"vertex {b} is not reachable from {a}")
    if quad.certified_radius is not COMPLETE:
        reach = int(graph_distance(m, m.root_tail)[a]) + d
        if reach > quad.certified_radius - 1:
            raise InsufficientCertification(reach + 1, quad.certified_radius, "geodesics may leave the ball")
    db = graph_distance(m, b)
    twin = m.twin.tolist()
    vof = m.vertex_of.tolist()

    def forward(u: int) -> List[int]:
        out = []
        for e in m.darts_out(u):
            w = vof[twin[e]]
            if da[w] == da[u] + 1 and da[w] + db[w] == d and w not in out:
                out.append(w)
        return out

    paths: List[Tuple[int, ...]] = []
    stack = [(a,)]
    while stack:
        path = stack.pop()
        u = path[-1]
        if u == b:
            paths.append(path)
            if len(paths) > cap:
                raise ResourceCap(cap, "geodesic enumeration")
            continue
        for w in reversed(forward(u)):
            stack.append(path + (w,))
    return paths
