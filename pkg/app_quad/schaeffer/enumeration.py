"""Перебор корневых квадрангуляций с n гранями через биекцию."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from app_quad.maps.rooted_map import CanonicalCode, RootedMap, canonical_code
from app_quad.sampling.enumeration import labeled_trees
from app_quad.schaeffer.construct import PointedQuadrangulation, phi_finite
from app_quad.trees.labeled_tree import LabeledTree

log = logging.getLogger(__name__)


def pointed_images(n: int) -> Iterator[Tuple[LabeledTree, int, PointedQuadrangulation]]:
    """Все (θ, η, Φ(θ, η)) для θ ∈ 𝕋⁽⁰⁾ₙ."""
    for tree in labeled_trees(n):
        for eta in (0, 1):
            yield tree, eta, phi_finite(tree, eta)


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    maps: Dict[CanonicalCode, RootedMap]
    pointed: int

    @property
    def count(self) -> int:
        return len(self.maps)


def enumerate_quadrangulations(n: int) -> EnumerationResult:
    """
    Qₙ с точностью до изоморфизма: образы Φ без отметки, дубликаты
    отбрасываются по каноническому коду.
    """
    maps: Dict[CanonicalCode, RootedMap] = {}
    pointed = set()
    for _, _, pq in pointed_images(n):
        pointed.add(pq.code)
        code = canonical_code(pq.quad)
        maps.setdefault(code, pq.quad)
    log.info("n=%s: %s pointed images, %s rooted quadrangulations", n, len(pointed), len(maps))
    return EnumerationResult(n, maps, len(pointed))
