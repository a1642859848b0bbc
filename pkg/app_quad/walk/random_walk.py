"""
Простое случайное блуждание как процесс на ориентированных рёбрах.

E₀ = e*, E_{j+1} выбирается равномерно среди дартов, выходящих из (E_j)₊;
X_k = (E_k)₋. На усечённой карте шаг возможен только из вершины, вся
окрестность которой известна; при выходе из такой области блуждание
останавливается с LeftSafeRegion (без отражения).
"""
from __future__ import annotations

import logging
from collections import Counter as TallyCounter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple, Union

from app_quad.errors import LabelParityViolation, LeftSafeRegion
from app_quad.maps.holes import QuadrangulationWithHoles, as_quad
from app_quad.maps.rooted_map import RootedMap
from app_quad.sampling.rng import RngStream
from app_quad.schaeffer.construct import WindowQuadrangulation

log = logging.getLogger(__name__)

Walkable = Union[RootedMap, QuadrangulationWithHoles, WindowQuadrangulation]


@dataclass(frozen=True)
class WalkTrace:
    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]
    stream: Tuple[int, ...]
    complete: bool = True
    map: Optional[RootedMap] = field(default=None, repr=False, compare=False)

    @property
    def steps(self) -> int:
        return len(self.edges) - 1


def _safe_vertices(q: Walkable) -> Tuple[RootedMap, Optional[FrozenSet[int]]]:
    """Карта и множество вершин с полной окрестностью (None — все)."""
    if isinstance(q, WindowQuadrangulation):
        return q.map, frozenset(v for v, ok in enumerate(q.complete) if ok)
    quad = as_quad(q)
    if not quad.hole_faces:
        return quad.map, None
    bad = quad.boundary_vertices
    return quad.map, frozenset(v for v in range(quad.map.n_vertices) if v not in bad)


def walk(q: Walkable, steps: int, rng: RngStream) -> WalkTrace:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    m, safe = _safe_vertices(q)
    twin = m.twin.tolist()
    vof = m.vertex_of.tolist()
    vd = m.vertex_darts
    e = m.root
    edges = [e]
    vertices = [vof[e]]
    for j in range(1, steps + 1):
        x = vof[twin[e]]
        if safe is not None and x not in safe:
            trace = WalkTrace(tuple(edges), tuple(vertices), rng.spawn_key, False, m)
            log.debug("walk stopped at step %s: vertex %s is not certified", j, x)
            raise LeftSafeRegion(j, trace)
        out = vd[x]
        e = out[rng.integers(0, len(out))]
        edges.append(e)
        vertices.append(x)
    return WalkTrace(tuple(edges), tuple(vertices), rng.spawn_key, True, m)


# ---------- процесс меток ----------

@dataclass(frozen=True)
class LabelProcess:
    sequence: Tuple[int, ...]
    increments: Dict[int, int]
    returns_to_start: int
    max_excursion: int

    @property
    def first_increment(self) -> Optional[int]:
        if len(self.sequence) < 2:
            return None
        return self.sequence[1] - self.sequence[0]

    @property
    def drift(self) -> float:
        """|ℓ(X_N) − ℓ(X_0)| / N."""
        n = len(self.sequence) - 1
        return abs(self.sequence[-1] - self.sequence[0]) / n if n else 0.0

    def deltas(self) -> Tuple[int, ...]:
        s = self.sequence
        return tuple(s[i + 1] - s[i] for i in range(len(s) - 1))


def label_process(trace: WalkTrace, labels: Sequence[int]) -> LabelProcess:
    """
    ℓ(X_n) вдоль следа. Возвраты считаются к метке стартовой вершины,
    экскурсия — наибольший промежуток между соседними возвратами
    (или хвост после последнего).
    """
    seq = tuple(int(labels[v]) for v in trace.vertices)
    tally: TallyCounter = TallyCounter()
    for a, b in zip(seq, seq[1:]):
        d = b - a
        if abs(d) != 1:
            raise LabelParityViolation(f"label increment {d} along an edge")
        tally[d] += 1
    start = seq[0]
    returns = 0
    longest = 0
    last = 0
    for i in range(1, len(seq)):
        if seq[i] == start:
            returns += 1
            longest = max(longest, i - last)
            last = i
    longest = max(longest, len(seq) - 1 - last)
    return LabelProcess(seq, {-1: tally[-1], 1: tally[1]}, returns, longest)


def stationarity_table(processes: Sequence[LabelProcess], shift: int, width: int = 4) -> Dict[Tuple[int, ...], int]:
    """Частоты окон (Δℓ_k, …, Δℓ_{k+width−1}) по репликам."""
    table: TallyCounter = TallyCounter()
    for p in processes:
        deltas = p.deltas()
        if len(deltas) < shift + width:
            continue
        table[deltas[shift:shift + width]] += 1
    return dict(table)


def stationarity_gap(a: Dict[Hashable, int], b: Dict[Hashable, int]) -> float:
    """
    Наибольшее отклонение частот двух таблиц в единицах стандартной ошибки
    разности (биномиальное приближение по каждому окну).
    """
    na = sum(a.values())
    nb = sum(b.values())
    if not na or not nb:
        return 0.0
    worst = 0.0
    for key in set(a) | set(b):
        pa = a.get(key, 0) / na
        pb = b.get(key, 0) / nb
        p = (a.get(key, 0) + b.get(key, 0)) / (na + nb)
        var = p * (1 - p) * (1 / na + 1 / nb)
        if var <= 0:
            continue
        worst = max(worst, abs(pa - pb) / var ** 0.5)
    return worst


def returns_by_length(process: LabelProcess, lengths: Sequence[int]) -> List[int]:
    """Число возвращений к стартовой метке за первые N шагов для каждого N."""
    seq = process.sequence
    start = seq[0]
    hits = [i for i in range(1, len(seq)) if seq[i] == start]
    out = []
    for n in lengths:
        out.append(sum(1 for i in hits if i <= n))
    return out
