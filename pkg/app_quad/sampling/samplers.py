"""
Точные сэмплеры: деревья Гальтона–Ватсона ρ_l, равномерные деревья размера n,
усечённые деревья Кестена и бит ориентации η.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from app_quad.errors import ResourceCap
from app_quad.sampling.rng import RngStream
from app_quad.trees.labeled_tree import LabeledTree
from app_quad.trees.spine import SpineHitsLevel, SpineSteps, SpineTree, StopRule

log = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 10_000_000


def _cap(cap: Optional[int]) -> int:
    if cap is not None:
        return int(cap)
    try:
        from app_quad.lab.config import node_cap
        return node_cap()
    except Exception:  # настройки Django могут быть не сконфигурированы
        return DEFAULT_NODE_CAP


def sample_gw(l: int, rng: RngStream, cap: Optional[int] = None, prune_below: Optional[int] = None) -> LabeledTree:
    """
    Дерево с законом ρ_l: геометрическое(½) число детей, равномерные
    приращения меток, метка корня l.

    prune_below: вершинам с меткой ≤ prune_below дети не разыгрываются —
    дерево обрезается там, где ниже уже ничего не нужно.
    """
    limit = _cap(cap)
    children: List[List[int]] = [[]]
    labels = [int(l)]
    i = 0
    while i < len(labels):
        lab = labels[i]
        if prune_below is None or lab > prune_below:
            k = rng.offspring()
            if k:
                if len(labels) + k > limit:
                    raise ResourceCap(limit, "Galton-Watson tree")
                kids = children[i]
                for _ in range(k):
                    kids.append(len(labels))
                    labels.append(lab + rng.step())
                    children.append([])
        i += 1
    return LabeledTree(tuple(tuple(c) for c in children), tuple(labels))


@dataclass(frozen=True)
class LabelFloor:
    """
    Итог поиска минимальной метки. low — наименьшая увиденная метка;
    censored: лимит вершин исчерпан, и low — только верхняя граница минимума.
    """
    low: int
    nodes: int
    censored: bool = False


def sample_gw_floor(l: int, rng: RngStream, floor: int, cap: Optional[int] = None) -> LabelFloor:
    """
    min ℓ по дереву ρ_l без построения самого дерева. Рост останавливается на
    первой метке ≤ floor: ниже минимум уже не различается.
    """
    limit = _cap(cap)
    low = int(l)
    if low <= floor:
        return LabelFloor(low, 1)
    stack = [low]
    nodes = 1
    while stack:
        lab = stack.pop()
        for _ in range(rng.offspring()):
            if nodes >= limit:
                log.debug("label floor search censored at %s nodes, low=%s", nodes, low)
                return LabelFloor(low, nodes, True)
            child = lab + rng.step()
            nodes += 1
            if child < low:
                low = child
                if low <= floor:
                    return LabelFloor(low, nodes)
            stack.append(child)
    return LabelFloor(low, nodes)


def sample_excursion_floor(rng: RngStream, floor: int, cap: Optional[int] = None) -> LabelFloor:
    """
    min ℓ по левому лесу L_0, …, L_{σ₁−1} дерева Кестена, где σ₁ — первый
    приход спины на −1. Правые деревья и сама спина не хранятся.
    """
    limit = _cap(cap)
    x = low = nodes = 0
    while x != -1:
        if nodes >= limit:
            return LabelFloor(low, nodes, True)
        part = sample_gw_floor(x, rng, floor, cap=limit - nodes)
        nodes += part.nodes
        low = min(low, part.low)
        if part.censored or low <= floor:
            return LabelFloor(low, nodes, part.censored)
        x += rng.step()
    return LabelFloor(low, nodes)


def dyck_to_tree(steps, labels_rng: Optional[RngStream] = None, root_label: int = 0,
                 increments: Optional[List[int]] = None) -> LabeledTree:
    """Плоское дерево по слову Дика (+1 — вниз к новому ребёнку, −1 — вверх)."""
    children: List[List[int]] = [[]]
    labels = [root_label]
    stack = [0]
    j = 0
    for s in steps:
        if s > 0:
            v = len(labels)
            if increments is not None:
                inc = increments[j]
            elif labels_rng is not None:
                inc = labels_rng.step()
            else:
                inc = 0
            j += 1
            children[stack[-1]].append(v)
            children.append([])
            labels.append(labels[stack[-1]] + inc)
            stack.append(v)
        else:
            stack.pop()
    return LabeledTree(tuple(tuple(c) for c in children), tuple(labels))


def sample_uniform_tree(n: int, rng: RngStream) -> LabeledTree:
    """
    Равномерное дерево из 𝕋⁽⁰⁾ₙ: перемешанная последовательность из n шагов +1
    и n+1 шагов −1, циклический сдвиг по лемме о циклах, затем метки.
    """
    if n < 1:
        raise ValueError("n must be ≥ 1")
    seq = np.concatenate([np.ones(n, dtype=np.int64), -np.ones(n + 1, dtype=np.int64)])
    seq = rng.permutation(seq)
    partial = np.cumsum(seq)
    cut = int(np.argmin(partial)) + 1
    rotated = np.concatenate([seq[cut:], seq[:cut]])[:-1]
    return dyck_to_tree(rotated.tolist(), rng)


def _grow(spine: List[int], left: List[LabeledTree], right: List[LabeledTree], stop: StopRule,
          rng: RngStream, cap: int, prune_below: Optional[int]) -> None:
    total = len(spine) + sum(t.size for t in left) + sum(t.size for t in right)
    while len(spine) == 1 or not stop.reached(spine):
        x = spine[-1]
        lt = sample_gw(x, rng, cap=cap - total, prune_below=prune_below)
        rt = sample_gw(x, rng, cap=cap - total - lt.size, prune_below=prune_below)
        total += lt.size + rt.size + 1
        if total > cap:
            raise ResourceCap(cap, "Kesten tree")
        left.append(lt)
        right.append(rt)
        spine.append(x + rng.step())


def sample_kesten_truncated(stop: StopRule, rng: RngStream, cap: Optional[int] = None,
                            prune_below: Optional[int] = None) -> SpineTree:
    """
    Дерево Кестена до правила остановки: спина — ленивое блуждание с шагами
    в {−1,0,1}, L_n и R_n — независимые деревья ρ_{X_n}.
    """
    limit = _cap(cap)
    spine, left, right = [0], [], []
    _grow(spine, left, right, stop, rng, limit, prune_below)
    return SpineTree(tuple(spine), tuple(left), tuple(right), stop)


def extend_kesten(st: SpineTree, stop: StopRule, rng: RngStream, cap: Optional[int] = None) -> SpineTree:
    """
    Продолжение выборки до более глубокого правила остановки. rng должен быть
    тем же потоком, который построил st: тогда результат совпадает с
    прямой выборкой до stop.
    """
    limit = _cap(cap)
    spine, left, right = list(st.spine), list(st.left), list(st.right)
    if stop.reached(spine):
        return SpineTree(tuple(spine), tuple(left), tuple(right), stop)
    _grow(spine, left, right, stop, rng, limit, None)
    return SpineTree(tuple(spine), tuple(left), tuple(right), stop)


def sample_eta(rng: RngStream) -> int:
    return rng.bit()


__all__ = [
    "SpineHitsLevel",
    "SpineSteps",
    "LabelFloor",
    "sample_gw",
    "sample_gw_floor",
    "sample_excursion_floor",
    "sample_uniform_tree",
    "sample_kesten_truncated",
    "extend_kesten",
    "sample_eta",
    "dyck_to_tree",
]
