"""
Метки из метрики.

Метка ℓ(u) − ℓ(v) восстанавливается как предел d(u, z) − d(v, z) при z → ∞;
на конечном окне берём моду по «далёким» свидетелям z. Для кодирования
Шассена–Дюрюса метки — расстояния до корневой вершины ∂, а выделенная
геодезическая Γ получается как общий начальный отрезок цепочек
последователей, идущих от далёких вершин к ∂.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from app_quad.errors import InsufficientCertification, NoFarWitness
from app_quad.maps.holes import COMPLETE, MapLike, as_quad
from app_quad.maps.rooted_map import RootedMap, graph_distance
from app_quad.schaeffer.augmented import TreeEdge, face_tree_edges
from app_quad.schaeffer.construct import WindowQuadrangulation

log = logging.getLogger(__name__)


def _mode(values: np.ndarray) -> Tuple[int, float]:
    """Мода (наименьшая при равенстве) и доля значений, равных ей."""
    res = stats.mode(values, keepdims=False)
    return int(res.mode), float(res.count) / len(values)


# ---------- уравнение для меток ----------

@dataclass(frozen=True)
class LabelInference:
    relative: Dict[int, int]        # оценка ℓ(u) − ℓ(e*₋)
    unanimity: Dict[int, float]     # доля свидетелей, согласных с модой
    pair_agreement: float           # доля пар с модой d(u,z) − d(v,z) = ℓ(u) − ℓ(v)
    pairs: int
    witnesses: int
    predicted_eta: int
    eta_matches: Optional[bool] = None
    disagreements: List[Tuple[int, int]] = field(default_factory=list)


def infer_labels_from_metric(
    wq: WindowQuadrangulation,
    radius: int,
    far_level: int,
    max_witnesses: Optional[int] = None,
) -> LabelInference:
    """
    Для всех u, v в шаре радиуса radius сравнивает моду d(u,z) − d(v,z) по
    свидетелям z с ℓ(z) ≤ far_level с разностью меток. Корень ∅ = e*₋
    определяется как конец корневого ребра с большей оценкой метки.
    """
    m = wq.map
    if radius > wq.quad.certified_radius:
        raise InsufficientCertification(radius, wq.quad.certified_radius)
    labels = wq.labels
    witnesses = sorted((v for v in range(m.n_vertices) if labels[v] <= far_level), key=lambda v: (labels[v], v))
    if max_witnesses is not None:
        witnesses = witnesses[:max_witnesses]
    if not witnesses:
        raise NoFarWitness(f"no vertex with label ≤ {far_level} in the window")

    D = np.stack([graph_distance(m, z) for z in witnesses])
    x0 = m.root_tail
    near = np.flatnonzero((graph_distance(m, x0, limit=radius) >= 0))
    inner = [int(u) for u in near]

    relative: Dict[int, int] = {}
    unanimity: Dict[int, float] = {}
    for u in inner:
        rel, share = _mode(D[:, u] - D[:, x0])
        relative[u] = rel
        unanimity[u] = share

    ok = 0
    total = 0
    bad: List[Tuple[int, int]] = []
    for i, u in enumerate(inner):
        for v in inner[i + 1:]:
            diff, _ = _mode(D[:, u] - D[:, v])
            total += 1
            if diff == labels[u] - labels[v]:
                ok += 1
            else:
                bad.append((u, v))
    head = m.root_head
    predicted = 0 if relative[x0] > relative.get(head, relative[x0]) else 1
    rate = ok / total if total else 1.0
    log.debug("label inference: %s witnesses, %s/%s pairs agree", len(witnesses), ok, total)
    return LabelInference(relative, unanimity, rate, total, len(witnesses), predicted,
                          predicted == wq.eta, bad)


# ---------- Γ и слияние геодезических ----------

def successor_chain_geodesic(
    m: RootedMap, lam: Sequence[int], start: int, first: Optional[int] = None
) -> Tuple[int, ...]:
    """
    Путь от start к вершине с λ = 0: в каждой вершине, придя по дарту b,
    поворачиваем по часовой стрелке от b до первого дарта, где λ убывает.
    Возвращается путь от ∂ к start.

    В start дарта прихода нет: поиск идёт от first (по умолчанию — минимальный
    дарт вершины). Любой выбор даёт геодезическую к ∂; после первого шага
    путь определён однозначно. cd_reconstruct берёт только общий префикс цепочек.
    """
    sigma_inv = m.sigma_inv.tolist()
    twin = m.twin.tolist()
    vof = m.vertex_of.tolist()
    x = start
    if first is None:
        first = m.darts_out(start)[0]
    elif m.tail(first) != start:
        raise ValueError(f"dart {first} does not leave vertex {start}")
    b = first
    path = [x]
    while lam[x] > 0:
        d = sigma_inv[b]
        for _ in range(m.degree(x)):
            if lam[vof[twin[d]]] == lam[x] - 1:
                break
            d = sigma_inv[d]
        else:
            raise InsufficientCertification(lam[x], None, f"no decreasing dart at vertex {x}")
        x = vof[twin[d]]
        b = twin[d]
        path.append(x)
    return tuple(reversed(path))


@dataclass(frozen=True)
class CDReconstruction:
    labels: np.ndarray              # λ = d(∂, ·), −1 вне точной области
    tree_edges: Tuple[TreeEdge, ...]
    gamma: Tuple[int, ...]          # Γ(0) = ∂, Γ(1), …
    radius: int


def _common_prefix(chains: List[Tuple[int, ...]]) -> Tuple[int, ...]:
    if not chains:
        return ()
    out = []
    for col in zip(*chains):
        if any(x != col[0] for x in col):
            break
        out.append(col[0])
    return tuple(out)


def cd_reconstruct(q: MapLike, r: int) -> CDReconstruction:
    """
    λ — расстояния до ∂ = e*₋ (точны до радиуса r + 1), фрагмент дерева по
    правилам граней для граней внутри шара и префикс Γ.
    """
    quad = as_quad(q.quad if isinstance(q, WindowQuadrangulation) else q)
    cert = quad.certified_radius
    if cert is not COMPLETE and r > cert:
        raise InsufficientCertification(r, cert)
    m = quad.map
    lam = graph_distance(m, m.root_tail, limit=r + 1)
    lam_l = lam.tolist()

    inner = set()
    for fid, cyc in enumerate(m.face_cycles):
        if fid in quad.hole_faces:
            continue
        if all(0 <= lam_l[m.tail(d)] <= r + 1 for d in cyc) and any(lam_l[m.tail(d)] < r for d in cyc):
            inner.add(fid)
    outer = set(range(m.n_faces)) - inner
    edges = tuple(face_tree_edges(m, lam_l, outer))

    far = [v for v in range(m.n_vertices) if lam_l[v] == r]
    chains = [successor_chain_geodesic(m, lam_l, v) for v in far]
    gamma = _common_prefix(chains)
    return CDReconstruction(lam, edges, gamma, r)


@dataclass(frozen=True)
class ConfluenceWitness:
    R: int
    R_prime: int
    gamma_R: int
    checked: int


def confluence_check(q: MapLike, R: int, r_cert: Optional[int] = None) -> Optional[ConfluenceWitness]:
    """
    Ищет минимальное R′ ≥ R: для всех z с R′ < λ(z) ≤ r_cert выполнено
    λ(z) = R + d(Γ(R), z). None — если Γ короче R или такого R′ < r_cert нет.
    """
    quad = as_quad(q.quad if isinstance(q, WindowQuadrangulation) else q)
    if r_cert is None:
        if quad.certified_radius is COMPLETE:
            raise InsufficientCertification(R, None, "r_cert is required for complete maps")
        r_cert = quad.certified_radius
    rec = cd_reconstruct(quad, r_cert)
    if len(rec.gamma) <= R:
        return None
    g = rec.gamma[R]
    m = quad.map
    dg = graph_distance(m, g, limit=r_cert).tolist()
    lam = rec.labels.tolist()
    worst = R
    checked = 0
    for z in range(m.n_vertices):
        lz = lam[z]
        if lz < 0 or lz > r_cert or lz <= R:
            continue
        checked += 1
        if dg[z] < 0 or lz != R + dg[z]:
            worst = max(worst, lz)
    if worst >= r_cert:
        return None
    return ConfluenceWitness(R, worst, g, checked)
