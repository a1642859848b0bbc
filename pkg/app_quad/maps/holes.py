"""
Квадрангуляции с дырами, шары B_r и локальная метрика.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Tuple, Union

import numpy as np

from app_quad.errors import InsufficientCertification, NotQuadrangulation
from app_quad.maps.rooted_map import CanonicalCode, RootedMap, build_map, canonical_code, graph_distance

COMPLETE = None  # certified_radius для полных (конечных) карт


@dataclass(frozen=True, eq=False)
class QuadrangulationWithHoles:
    map: RootedMap
    hole_faces: FrozenSet[int] = frozenset()
    certified_radius: Optional[int] = COMPLETE
    # номер дарта исходной карты для каждого дарта (если карта вырезана из другой)
    dart_origin: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def is_complete(self) -> bool:
        return self.certified_radius is COMPLETE

    @cached_property
    def code(self) -> CanonicalCode:
        return canonical_code(self.map, self.hole_faces)

    def inner_faces(self) -> Tuple[int, ...]:
        return tuple(f for f in range(self.map.n_faces) if f not in self.hole_faces)

    @cached_property
    def boundary_vertices(self) -> FrozenSet[int]:
        """Вершины, инцидентные дырам: их окрестность в карте неполна."""
        out = set()
        for f in self.hole_faces:
            out.update(self.map.face_vertices(f))
        return frozenset(out)

    def validate(self) -> "QuadrangulationWithHoles":
        for fid, cyc in enumerate(self.map.face_cycles):
            deg = len(cyc)
            if fid in self.hole_faces:
                if deg % 2:
                    raise NotQuadrangulation(f"hole face {fid} has odd degree {deg}")
            elif deg != 4:
                raise NotQuadrangulation(f"face {fid} has degree {deg}")
        return self

    def same_as(self, other: "QuadrangulationWithHoles") -> bool:
        return self.code == other.code


MapLike = Union[RootedMap, QuadrangulationWithHoles]


def as_quad(q: MapLike) -> QuadrangulationWithHoles:
    if isinstance(q, QuadrangulationWithHoles):
        return q
    return QuadrangulationWithHoles(q)


def root_edge_ball() -> QuadrangulationWithHoles:
    """ball(q, 0): одно корневое ребро, его единственная грань — дыра."""
    m = build_map([1, 0], [0, 1], 0)
    return QuadrangulationWithHoles(m, frozenset({0}), 0)


def ball(q: MapLike, r: int) -> QuadrangulationWithHoles:
    """
    B_{Q,r}: объединение граней q, имеющих вершину на расстоянии < r от e*₋.
    Остальные области становятся дырами.
    """
    q = as_quad(q)
    if r < 0:
        raise ValueError("radius must be non-negative")
    if q.certified_radius is not COMPLETE and r > q.certified_radius:
        raise InsufficientCertification(r, q.certified_radius)
    if r == 0:
        return root_edge_ball()

    m = q.map
    dist = graph_distance(m, m.root_tail, limit=r + 1)
    face_of = m.face_of
    selected = []
    for fid, cyc in enumerate(m.face_cycles):
        if fid in q.hole_faces:
            continue
        for d in cyc:
            dv = dist[m.vertex_of[d]]
            if 0 <= dv < r:
                selected.append(fid)
                break
    sel = np.zeros(m.n_faces, dtype=bool)
    sel[selected] = True

    keep = sel[face_of] | sel[face_of[m.twin]]
    kept = np.flatnonzero(keep)
    if kept.shape[0] == m.n_darts and not q.hole_faces:
        return QuadrangulationWithHoles(m, frozenset(), r if q.certified_radius is not COMPLETE else COMPLETE,
                                        np.arange(m.n_darts))

    new_id = np.full(m.n_darts, -1, dtype=np.int64)
    new_id[kept] = np.arange(kept.shape[0], dtype=np.int64)
    sigma = m.sigma.tolist()
    keep_l = keep.tolist()
    twin_new = new_id[m.twin[kept]]
    sigma_new = np.empty(kept.shape[0], dtype=np.int64)
    for i, d in enumerate(kept.tolist()):
        e = sigma[d]
        while not keep_l[e]:
            e = sigma[e]
        sigma_new[i] = new_id[e]
    sub = build_map(twin_new, sigma_new, int(new_id[m.root]))

    inner = {int(sub.face_of[new_id[m.face_cycles[f][0]]]) for f in selected}
    holes = frozenset(f for f in range(sub.n_faces) if f not in inner)
    return QuadrangulationWithHoles(sub, holes, r, kept)


def local_distance(q1: MapLike, q2: MapLike) -> Fraction:
    """
    d(q, q') = (1 + sup{r : B_r(q) = B_r(q')})^{-1}; sup∅ = 0, совпадение — 0.
    Для сертифицированных шаров сравнение идёт до общего радиуса.
    """
    a, b = as_quad(q1), as_quad(q2)
    caps = [c for c in (a.certified_radius, b.certified_radius) if c is not COMPLETE]
    limit = min(caps) if caps else None
    if limit is None and a.code == b.code:
        return Fraction(0)
    last = 0
    r = 1
    while limit is None or r <= limit:
        if ball(a, r).code != ball(b, r).code:
            return Fraction(1, 1 + last)
        last = r
        r += 1
    return Fraction(0)


def vertex_origin(q: QuadrangulationWithHoles, parent: RootedMap, v: int) -> int:
    """Вершина исходной карты, из которой вырезана вершина v шара."""
    if q.dart_origin is None:
        return v
    d = q.map.darts_out(v)[0]
    return parent.tail(int(q.dart_origin[d]))


def vertices_within(q: QuadrangulationWithHoles, r: int) -> Iterable[int]:
    dist = graph_distance(q.map, q.map.root_tail, limit=r)
    return (int(v) for v in np.flatnonzero((dist >= 0) & (dist <= r)))
