"""Точность биекции, тождество расстояний и подсчёт Qₙ."""
from __future__ import annotations

import math
from typing import Any, Dict, List

from app_quad.geometry.bounds import check_distance_bounds
from app_quad.lab.experiments.base import Experiment, require
from app_quad.lab.stats import rate_row
from app_quad.lab.types import Row, SummaryRow
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import sample_eta, sample_uniform_tree
from app_quad.schaeffer.construct import phi_finite
from app_quad.schaeffer.enumeration import enumerate_quadrangulations, pointed_images
from app_quad.schaeffer.inverse import phi_inverse_finite


def quadrangulation_count(n: int) -> int:
    """|Qₙ| = 2·3ⁿ·Cat(n)/(n+2)."""
    return 2 * 3 ** n * math.comb(2 * n, n) // ((n + 1) * (n + 2))


def pointed_count(n: int) -> int:
    """Число пар (θ, η) с θ ∈ 𝕋⁽⁰⁾ₙ: 2·3ⁿ·Cat(n)."""
    return 2 * 3 ** n * math.comb(2 * n, n) // (n + 1)


class Bijection(Experiment):
    name = "bijection"
    help = "Φ⁻¹∘Φ = id и тождество d(v, ρ) = ℓ(v) − min ℓ + 1 на случайных деревьях."
    defaults = {"n_max": 50, "bounds_max": 30, "exhaustive_n": 3}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["n_max"] >= 1, "n_max must be ≥ 1")
        require(0 <= p["exhaustive_n"] <= 5, "exhaustive_n must be in [0, 5]")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        n = rng.integers(1, p["n_max"] + 1)
        tree = sample_uniform_tree(n, rng)
        eta = sample_eta(rng)
        pq = phi_finite(tree, eta)
        back, eta_back = phi_inverse_finite(pq)
        report = check_distance_bounds(pq, tree)
        bounds_ok = None
        if n <= p["bounds_max"]:
            bounds_ok = not (report.trivial_violations or report.cactus_violations)
        return {
            "n": n,
            "eta": eta,
            "roundtrip": back == tree and eta_back == eta,
            "identity": not report.distance_identity_violations,
            "bounds": bounds_ok,
        }

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        out = [
            rate_row("roundtrip", sum(1 for r in rows if r["roundtrip"]), n, 1.0),
            rate_row("distance_identity", sum(1 for r in rows if r["identity"]), n, 1.0),
        ]
        bounded = [r for r in rows if r["bounds"] is not None]
        if bounded:
            out.append(rate_row("distance_bounds", sum(1 for r in bounded if r["bounds"]), len(bounded), 1.0))
        for k in range(1, p["exhaustive_n"] + 1):
            total = good = 0
            for tree, eta, pq in pointed_images(k):
                total += 1
                back, eta_back = phi_inverse_finite(pq)
                good += int(back == tree and eta_back == eta)
            out.append(rate_row(f"exhaustive_roundtrip_n{k}", good, total, 1.0, n=k))
        return out


class Enumerate(Experiment):
    name = "enumerate"
    help = "Перебор Qₙ через биекцию и сравнение с 2·3ⁿ·Cat(n)/(n+2)."
    defaults = {"n_max": 4}
    exhaustive = True

    def check(self, p: Dict[str, Any]) -> None:
        require(1 <= p["n_max"] <= 6, "n_max must be in [1, 6]")

    def replica_count(self, p: Dict[str, Any], replicas: int) -> int:
        return p["n_max"]

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        n = replica + 1
        res = enumerate_quadrangulations(n)
        return {"n": n, "maps": res.count, "expected": quadrangulation_count(n),
                "pointed": res.pointed, "expected_pointed": pointed_count(n)}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        out = []
        for r in rows:
            out.append({"statistic": f"|Q_{r['n']}|", "empirical": r["maps"], "stderr": None,
                        "oracle": r["expected"], "z": None,
                        "pass": r["maps"] == r["expected"] and r["pointed"] == r["expected_pointed"],
                        "n": r["n"], "pointed": r["pointed"]})
        return out
