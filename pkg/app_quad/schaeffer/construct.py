"""
Прямое соответствие Шеффера Φ: конечное (с отмеченной вершиной ∂) и для окна
дерева со спиной (без ∂, с дырами вокруг неполных вершин).

Обе версии собирает один построитель по модели хорд: углы — точки на
окружности (конечный случай) или на прямой (окно), из каждого угла идёт хорда
к его последователю. Хорды не пересекаются, поэтому порядок дартов внутри угла
определяется прямым расстоянием до другого конца хорды: по часовой стрелке
дарты идут по убыванию (q − p) mod N. Вращение вершины — углы вершины по
возрастанию индекса.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app_quad.errors import ConfigError, InsufficientCertification, MalformedTree, Unstable, WindowExhausted
from app_quad.maps.holes import COMPLETE, QuadrangulationWithHoles, ball
from app_quad.maps.rooted_map import CanonicalCode, RootedMap, build_map, canonical_code, graph_distance
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import extend_kesten
from app_quad.schaeffer.successor import UNRESOLVED, next_smaller
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineHitsLevel, SpineTree, SpineWindow

log = logging.getLogger(__name__)

SINK_VERTEX = -1


# ---------- построитель ----------

def _assemble(
    n_points: int,
    point_vertex: Sequence[int],
    chords: Sequence[Tuple[int, int]],
) -> Tuple[List[int], List[int], List[int]]:
    """
    Хорда k даёт дарт 2k в точке-источнике и 2k+1 в точке-цели.
    Возвращает (twin, sigma, точка каждого дарта).
    """
    n_darts = 2 * len(chords)
    dart_point = [0] * n_darts
    at_point: Dict[int, List[Tuple[int, int]]] = {}
    for k, (p, q) in enumerate(chords):
        dart_point[2 * k] = p
        dart_point[2 * k + 1] = q
        at_point.setdefault(p, []).append(((q - p) % n_points, 2 * k))
        at_point.setdefault(q, []).append(((p - q) % n_points, 2 * k + 1))

    by_vertex: Dict[int, List[int]] = {}
    for p in sorted(at_point):
        by_vertex.setdefault(point_vertex[p], []).append(p)

    sigma = [0] * n_darts
    for points in by_vertex.values():
        cw: List[int] = []
        for p in points:
            cw.extend(d for _, d in sorted(at_point[p], reverse=True))
        for i, d in enumerate(cw):
            sigma[d] = cw[i - 1]
    twin = [d ^ 1 for d in range(n_darts)]
    return twin, sigma, dart_point


def _root_component(twin: List[int], sigma: List[int], root: int) -> List[int]:
    seen = {root}
    stack = [root]
    while stack:
        d = stack.pop()
        for e in (twin[d], sigma[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return sorted(seen)


def _restrict(twin: List[int], sigma: List[int], keep: List[int]) -> Tuple[List[int], List[int], Dict[int, int]]:
    new = {d: i for i, d in enumerate(keep)}
    return [new[twin[d]] for d in keep], [new[sigma[d]] for d in keep], new


def _vertex_table(m: RootedMap, dart_point: Sequence[int], point_vertex: Sequence[int]) -> Tuple[int, ...]:
    return tuple(point_vertex[dart_point[m.darts_out(v)[0]]] for v in range(m.n_vertices))


# ---------- конечный случай ----------

@dataclass(frozen=True, eq=False)
class PointedQuadrangulation:
    quad: RootedMap
    pointed: int
    # метки вершин карты; у ∂ — min − 1
    labels: Tuple[int, ...] = ()
    # вершина дерева для каждой вершины карты, SINK_VERTEX у ∂
    tree_vertex: Tuple[int, ...] = ()

    @cached_property
    def code(self) -> CanonicalCode:
        return canonical_code(self.quad, pointed=self.pointed)

    @cached_property
    def distances(self) -> np.ndarray:
        """d(v, ρ) для всех вершин."""
        return graph_distance(self.quad, self.pointed)

    @property
    def n_faces(self) -> int:
        return self.quad.n_faces

    def same_as(self, other: "PointedQuadrangulation") -> bool:
        return self.code == other.code


def phi_finite(tree: LabeledTree, eta: int) -> PointedQuadrangulation:
    """Φ((θ, ℓ), η) для θ ∈ 𝕋⁽⁰⁾ₙ: n граней, n+2 вершин, 2n рёбер."""
    if tree.root_label != 0:
        raise MalformedTree("root label must be 0")
    if tree.size < 1:
        raise MalformedTree("tree must have at least one edge")
    if eta not in (0, 1):
        raise ValueError("eta must be 0 or 1")
    n = tree.size
    visits = tree.visit_sequence[:-1]
    labels = [tree.labels[v] for v in visits]
    succ = next_smaller(labels, cyclic=True)
    lowest = min(labels)
    m = labels.index(lowest)

    def pos(i: int) -> int:
        return i if i <= m else i + 1

    sink_pos = m + 1
    sink_id = tree.n_vertices
    point_vertex = [0] * (2 * n + 1)
    for i, v in enumerate(visits):
        point_vertex[pos(i)] = v
    point_vertex[sink_pos] = sink_id

    chords = [(pos(i), pos(s) if s != UNRESOLVED else sink_pos) for i, s in enumerate(succ)]
    twin, sigma, dart_point = _assemble(2 * n + 1, point_vertex, chords)
    qmap = build_map(twin, sigma, eta)

    tv = _vertex_table(qmap, dart_point, point_vertex)
    pointed = tv.index(sink_id)
    tree_vertex = tuple(SINK_VERTEX if v == sink_id else v for v in tv)
    vlabels = tuple(lowest - 1 if v == SINK_VERTEX else tree.labels[v] for v in tree_vertex)
    return PointedQuadrangulation(qmap, pointed, vlabels, tree_vertex)


# ---------- окно дерева со спиной ----------

@dataclass(frozen=True, eq=False)
class WindowQuadrangulation:
    """
    Карта Φ на окне: вершина полна, если все её углы и дуги лежат в окне
    (метка строго больше X_K и это не S(K)). Грани через неполные вершины — дыры.
    """
    quad: QuadrangulationWithHoles
    labels: Tuple[int, ...]
    tree_vertex: Tuple[int, ...]
    complete: Tuple[bool, ...]
    window: SpineWindow
    eta: int

    @property
    def map(self) -> RootedMap:
        return self.quad.map

    @cached_property
    def map_vertex(self) -> Dict[int, int]:
        """Вершина окна → вершина карты (только вершины, попавшие в карту)."""
        return {t: v for v, t in enumerate(self.tree_vertex)}

    @property
    def root_vertex(self) -> int:
        """Вершина карты, соответствующая ∅."""
        return self.map_vertex[self.window.spine_vertex[0]]


def _margin() -> int:
    from app_quad.lab.config import truncation_margin
    return truncation_margin()


def certified_radius_of(st: SpineTree) -> int:
    return max(0, -st.spine[-1] - _margin())


def window_map(st: SpineTree, eta: int) -> WindowQuadrangulation:
    """Φ((T, ℓ), η) на окне: дуги угол → последователь, без ∂, компонента корня."""
    if eta not in (0, 1):
        raise ValueError("eta must be 0 or 1")
    w = st.window
    labels = w.position_label.tolist()
    point_vertex = w.position_vertex.tolist()
    succ = next_smaller(labels, cyclic=False)
    chords: List[Tuple[int, int]] = []
    root_chord = -1
    for p, s in enumerate(succ):
        if s == UNRESOLVED:
            continue
        if p == w.offset:
            root_chord = len(chords)
        chords.append((p, s))
    if root_chord < 0:
        raise WindowExhausted(0, "root corner has no successor inside the window")

    twin, sigma, dart_point = _assemble(w.n_corners, point_vertex, chords)
    root = 2 * root_chord + eta
    keep = _root_component(twin, sigma, root)
    twin_k, sigma_k, new = _restrict(twin, sigma, keep)
    qmap = build_map(twin_k, sigma_k, new[root])
    kept_point = [dart_point[d] for d in keep]

    tree_vertex = _vertex_table(qmap, kept_point, point_vertex)
    last = w.spine_vertex[-1]
    floor = st.spine[-1]
    complete = tuple(t != last and w.labels[t] > floor for t in tree_vertex)
    holes = frozenset(
        f for f in range(qmap.n_faces)
        if not all(complete[v] for v in qmap.face_vertices(f))
    )
    quad = QuadrangulationWithHoles(qmap, holes, certified_radius_of(st))
    return WindowQuadrangulation(
        quad=quad,
        labels=tuple(w.labels[t] for t in tree_vertex),
        tree_vertex=tree_vertex,
        complete=complete,
        window=w,
        eta=eta,
    )


@dataclass(frozen=True)
class StabilizationCertificate:
    radius: int
    levels: Tuple[int, int]
    stable: bool
    code: Optional[CanonicalCode] = None


def _level_of(st: SpineTree) -> int:
    if not isinstance(st.stop, SpineHitsLevel):
        raise ConfigError("truncated construction needs a SpineHitsLevel stop rule")
    return st.stop.level


def phi_truncated(st: SpineTree, eta: int, r: int, rng: RngStream):
    """
    B_{Q,r}(Φ((T_∞, ℓ), η)) по окну до σ_M с проверкой удвоением: выборка
    продолжается тем же потоком rng до σ_{2M}, и шары обоих окон должны
    иметь одинаковый канонический код.

    Возвращает (шар, сертификат, продолженное дерево).
    """
    M = _level_of(st)
    margin = _margin()
    if M < r + margin:
        raise InsufficientCertification(r, M - margin, f"window must reach level r + {margin}")
    near = ball(window_map(st, eta).quad, r)
    deeper = extend_kesten(st, SpineHitsLevel(2 * M), rng)
    far = ball(window_map(deeper, eta).quad, r)
    stable = near.code == far.code
    cert = StabilizationCertificate(r, (M, 2 * M), stable, near.code if stable else None)
    if not stable:
        log.warning("ball of radius %s differs between levels %s and %s", r, M, 2 * M)
        raise Unstable(r, (M, 2 * M), deeper)
    return near, cert, deeper


@dataclass(frozen=True)
class StableBall:
    ball: QuadrangulationWithHoles
    certificate: StabilizationCertificate
    tree: SpineTree
    deepenings: int


def deepen_and_ball(st: SpineTree, eta: int, r: int, rng: RngStream,
                    max_deepenings: Optional[int] = None) -> StableBall:
    """
    phi_truncated с автоматическим углублением окна при Unstable и
    WindowExhausted; не больше max_deepenings удвоений.
    """
    if max_deepenings is None:
        from app_quad.lab.config import max_deepenings as configured
        max_deepenings = configured()
    M = _level_of(st)
    if M < r + _margin():
        st = extend_kesten(st, SpineHitsLevel(r + _margin()), rng)
    last_error: Exception = Unstable(r, (M, 2 * M))
    for attempt in range(max_deepenings + 1):
        try:
            near, cert, deeper = phi_truncated(st, eta, r, rng)
            return StableBall(near, cert, deeper, attempt)
        except Unstable as e:
            last_error = e
            st = e.deeper
        except WindowExhausted as e:
            last_error = e
            st = extend_kesten(st, SpineHitsLevel(2 * _level_of(st)), rng)
        log.info("deepening window to level %s (attempt %s)", _level_of(st), attempt + 1)
    raise last_error
