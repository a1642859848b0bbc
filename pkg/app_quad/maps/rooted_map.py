"""
Корневые планарные карты в представлении полурёбер (дартов).

Дарт d — ориентированное ребро. twin[d] — обратный дарт, sigma[d] — следующий
дарт вокруг начала d против часовой стрелки. Грани — циклы phi(d) = sigma(twin(d)),
грань при таком обходе лежит справа.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app_quad.errors import EulerViolation, NotConnected, NotInvolution

log = logging.getLogger(__name__)

Face = Tuple[int, ...]


def _frozen(values: Iterable[int]) -> np.ndarray:
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=np.int64)
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class RootedMap:
    twin: np.ndarray
    sigma: np.ndarray
    root: int

    # ---- размеры ----

    @property
    def n_darts(self) -> int:
        return int(self.twin.shape[0])

    @property
    def n_edges(self) -> int:
        return self.n_darts // 2

    @cached_property
    def sigma_inv(self) -> np.ndarray:
        inv = np.empty_like(self.sigma)
        inv[self.sigma] = np.arange(self.n_darts, dtype=np.int64)
        inv.flags.writeable = False
        return inv

    # ---- вершины ----

    @cached_property
    def vertex_of(self) -> np.ndarray:
        """Номер вершины для каждого дарта; вершины упорядочены по минимальному дарту."""
        out = np.full(self.n_darts, -1, dtype=np.int64)
        sigma = self.sigma.tolist()
        vid = 0
        for start in range(self.n_darts):
            if out[start] >= 0:
                continue
            d = start
            while out[d] < 0:
                out[d] = vid
                d = sigma[d]
            vid += 1
        out.flags.writeable = False
        return out

    @cached_property
    def n_vertices(self) -> int:
        return int(self.vertex_of.max()) + 1 if self.n_darts else 0

    def vertices(self) -> range:
        return range(self.n_vertices)

    @cached_property
    def vertex_darts(self) -> Tuple[Tuple[int, ...], ...]:
        """Дарты, выходящие из каждой вершины, против часовой стрелки от минимального."""
        sigma = self.sigma.tolist()
        seen = [False] * self.n_darts
        out: List[Tuple[int, ...]] = []
        for start in range(self.n_darts):
            if seen[start]:
                continue
            cyc = []
            d = start
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = sigma[d]
            out.append(tuple(cyc))
        return tuple(out)

    def tail(self, d: int) -> int:
        return int(self.vertex_of[d])

    def head(self, d: int) -> int:
        return int(self.vertex_of[self.twin[d]])

    def degree(self, v: int) -> int:
        return len(self.vertex_darts[v])

    def darts_out(self, v: int) -> Tuple[int, ...]:
        return self.vertex_darts[v]

    @property
    def root_tail(self) -> int:
        return self.tail(self.root)

    @property
    def root_head(self) -> int:
        return self.head(self.root)

    def phi(self, d: int) -> int:
        return int(self.sigma[self.twin[d]])

    # ---- грани ----

    @cached_property
    def face_cycles(self) -> Tuple[Face, ...]:
        twin = self.twin.tolist()
        sigma = self.sigma.tolist()
        seen = [False] * self.n_darts
        out: List[Face] = []
        for start in range(self.n_darts):
            if seen[start]:
                continue
            cyc = []
            d = start
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = sigma[twin[d]]
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def face_of(self) -> np.ndarray:
        out = np.empty(self.n_darts, dtype=np.int64)
        for fid, cyc in enumerate(self.face_cycles):
            out[list(cyc)] = fid
        out.flags.writeable = False
        return out

    @property
    def n_faces(self) -> int:
        return len(self.face_cycles)

    def face_vertices(self, fid: int) -> Tuple[int, ...]:
        return tuple(self.tail(d) for d in self.face_cycles[fid])

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def rerooted(self, d: int) -> "RootedMap":
        if not 0 <= d < self.n_darts:
            raise ValueError(f"dart {d} out of range")
        return RootedMap(self.twin, self.sigma, int(d))

    def __repr__(self) -> str:
        return f"RootedMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces}, root={self.root})"


# ---- Публичное API модуля ----

def build_map(twin_table: Sequence[int], next_table: Sequence[int], root_dart: int) -> RootedMap:
    """
    Собирает и проверяет карту: twin — инволюция без неподвижных точек,
    next — перестановка, карта связна и имеет род 0.
    """
    twin = _frozen(twin_table)
    sigma = _frozen(next_table)
    n = twin.shape[0]
    if n == 0 or n % 2:
        raise NotInvolution(f"dart count must be positive and even, got {n}")
    if sigma.shape[0] != n:
        raise ValueError("twin and next tables differ in length")
    if not 0 <= root_dart < n:
        raise ValueError(f"root dart {root_dart} out of range")
    if twin.min() < 0 or twin.max() >= n:
        raise NotInvolution("twin table is not total on darts")
    idx = np.arange(n, dtype=np.int64)
    if np.any(twin == idx) or np.any(twin[twin] != idx):
        raise NotInvolution("twin must be a fixed-point-free involution")
    if sigma.min() < 0 or sigma.max() >= n or np.unique(sigma).shape[0] != n:
        raise ValueError("next_at_vertex is not a permutation")

    m = RootedMap(twin, sigma, int(root_dart))
    _check_connected(m)
    chi = m.euler_characteristic()
    if chi != 2:
        raise EulerViolation(f"V - E + F = {chi}, expected 2")
    return m


def _check_connected(m: RootedMap) -> None:
    twin = m.twin.tolist()
    sigma = m.sigma.tolist()
    seen = [False] * m.n_darts
    seen[m.root] = True
    stack = [m.root]
    count = 1
    while stack:
        d = stack.pop()
        for e in (twin[d], sigma[d]):
            if not seen[e]:
                seen[e] = True
                count += 1
                stack.append(e)
    if count != m.n_darts:
        raise NotConnected(f"only {count} of {m.n_darts} darts reachable from the root")


def faces(m: RootedMap) -> List[Face]:
    return list(m.face_cycles)


def graph_distance(m: RootedMap, source: int, limit: Optional[int] = None) -> np.ndarray:
    """BFS-расстояния от вершины source; -1 для вершин дальше limit."""
    dist = np.full(m.n_vertices, -1, dtype=np.int64)
    dist[source] = 0
    vd = m.vertex_darts
    vof = m.vertex_of.tolist()
    twin = m.twin.tolist()
    q = deque([source])
    while q:
        v = q.popleft()
        dv = dist[v]
        if limit is not None and dv >= limit:
            continue
        for d in vd[v]:
            w = vof[twin[d]]
            if dist[w] < 0:
                dist[w] = dv + 1
                q.append(w)
    return dist


def relabel(m: RootedMap, permutation: Sequence[int]) -> RootedMap:
    """Изоморфная копия: дарт d получает номер permutation[d]."""
    p = np.asarray(permutation, dtype=np.int64)
    twin = np.empty_like(p)
    sigma = np.empty_like(p)
    twin[p] = p[m.twin]
    sigma[p] = p[m.sigma]
    return RootedMap(_frozen(twin), _frozen(sigma), int(p[m.root]))


@dataclass(frozen=True)
class CanonicalCode:
    data: bytes = field(repr=False)

    def __len__(self) -> int:
        return len(self.data)

    def hex(self) -> str:
        return self.data.hex()


def canonical_order(m: RootedMap) -> List[int]:
    """Порядок дартов обхода в ширину от корня: сначала twin, потом sigma."""
    twin = m.twin.tolist()
    sigma = m.sigma.tolist()
    new = [-1] * m.n_darts
    order = [m.root]
    new[m.root] = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (twin[d], sigma[d]):
            if new[e] < 0:
                new[e] = len(order)
                order.append(e)
    return order


def canonical_code(
    m: RootedMap,
    holes: Iterable[int] = (),
    pointed: Optional[int] = None,
) -> CanonicalCode:
    """
    Код карты с точностью до изоморфизма, сохраняющего корень и ориентацию.
    Дырявые грани и отмеченная вершина входят в код.
    """
    order = canonical_order(m)
    new = np.empty(m.n_darts, dtype=np.int64)
    new[np.asarray(order, dtype=np.int64)] = np.arange(m.n_darts, dtype=np.int64)
    old = np.asarray(order, dtype=np.int64)
    hole_set = set(int(h) for h in holes)
    hole_flags = np.zeros(m.n_darts, dtype=np.int64)
    if hole_set:
        face_of = m.face_of
        hole_flags = np.fromiter((1 if int(face_of[d]) in hole_set else 0 for d in order), dtype=np.int64, count=m.n_darts)
    marker = -1
    if pointed is not None:
        marker = int(min(new[d] for d in m.darts_out(pointed)))
    header = np.asarray([m.n_darts, marker], dtype=np.int64)
    body = np.stack([new[m.twin[old]], new[m.sigma[old]], hole_flags], axis=1).reshape(-1)
    return CanonicalCode(np.concatenate([header, body]).astype("<i8").tobytes())
