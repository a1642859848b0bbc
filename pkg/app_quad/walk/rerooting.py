"""
Перекоренение Θ⁽¹⁾: корень переносится на первый шаг блуждания E₁.

Для равномерной меры νₙ на Qₙ распределение q^{(E₁)} считается точно —
перебором всех карт и всех первых шагов в рациональной арифметике.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from app_quad.maps.holes import MapLike, as_quad
from app_quad.maps.rooted_map import CanonicalCode, RootedMap, canonical_code
from app_quad.schaeffer.enumeration import enumerate_quadrangulations

log = logging.getLogger(__name__)

THETA_EXACT_MAX_N = 3


def reroot(q: MapLike, e: int) -> RootedMap:
    """q^{(e)}: та же карта с корневым дартом e."""
    quad = as_quad(q)
    if quad.hole_faces:
        raise ValueError("rerooting is defined for complete maps only")
    return quad.map.rerooted(e)


@dataclass(frozen=True)
class ThetaReport:
    n: int
    maps: int
    prior: Dict[CanonicalCode, Fraction]
    after_step: Dict[CanonicalCode, Fraction]
    after_reversal: Dict[CanonicalCode, Fraction]

    @property
    def invariant(self) -> bool:
        return self.after_step == self.prior

    @property
    def reversal_invariant(self) -> bool:
        return self.after_reversal == self.prior

    def max_deviation(self) -> Fraction:
        keys = set(self.prior) | set(self.after_step)
        return max(abs(self.prior.get(k, Fraction(0)) - self.after_step.get(k, Fraction(0))) for k in keys)


def theta_invariance_test(n: int) -> ThetaReport:
    """Θ⁽¹⁾(νₙ) и образ νₙ при обращении корня — против самой νₙ."""
    if not 1 <= n <= THETA_EXACT_MAX_N:
        raise ValueError(f"exact mode supports 1 ≤ n ≤ {THETA_EXACT_MAX_N}")
    res = enumerate_quadrangulations(n)
    weight = Fraction(1, res.count)
    prior = {code: weight for code in res.maps}
    after: Dict[CanonicalCode, Fraction] = {}
    reversed_: Dict[CanonicalCode, Fraction] = {}
    for q in res.maps.values():
        steps = q.darts_out(q.root_head)
        share = weight / len(steps)
        for e in steps:
            code = canonical_code(reroot(q, e))
            after[code] = after.get(code, Fraction(0)) + share
        code = canonical_code(reroot(q, int(q.twin[q.root])))
        reversed_[code] = reversed_.get(code, Fraction(0)) + weight
    report = ThetaReport(n, res.count, prior, after, reversed_)
    log.info("theta n=%s: %s maps, invariant=%s, reversal=%s", n, res.count, report.invariant, report.reversal_invariant)
    return report
