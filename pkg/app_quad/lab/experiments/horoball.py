"""Закон длины разделяющего цикла |∂F_{−r}| против точной прогонки и предела."""
from __future__ import annotations

from typing import Any, Dict, List

from app_quad.horoball.boundary import sample_boundary_stat
from app_quad.horoball.laplace import laplace_closed, laplace_exact, laplace_limit
from app_quad.lab.experiments.base import Experiment, require
from app_quad.lab.stats import check_row, empirical_laplace, empirical_tail, loglog_slope
from app_quad.lab.types import Row, SummaryRow
from app_quad.sampling.rng import RngStream


class Laplace(Experiment):
    name = "laplace"
    help = "E[exp(−λ·2|∂F_{−r}|/r²)] против laplace_exact(r, λ) и (1+√λ)⁻³."
    defaults = {
        "r": 40,
        "lambdas": [0.5, 1.0, 2.0],
        "tail_points": [2.0, 4.0, 8.0, 16.0],
        "tail_slope": -0.5,
        "tail_tol": 0.15,
        "limit_r": 200,
        "limit_tol": 0.01,
    }

    def check(self, p: Dict[str, Any]) -> None:
        require(p["r"] >= 1, "r must be ≥ 1")
        require(bool(p["lambdas"]) and all(lam > 0 for lam in p["lambdas"]), "λ must be positive")
        require(all(y > 0 for y in p["tail_points"]), "tail points must be positive")
        require(p["limit_r"] >= 0, "limit_r must be ≥ 0 (0 disables the check)")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        stat = sample_boundary_stat(p["r"], rng, replica)
        return {"size": stat.size, "rescaled": stat.rescaled}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        r = p["r"]
        values = [row["rescaled"] for row in rows]
        out: List[SummaryRow] = []
        for lam in p["lambdas"]:
            est, se = empirical_laplace(values, lam)
            exact = laplace_exact(r, lam)
            out.append(check_row(
                f"laplace(lambda={lam})", est, se, exact,
                **{"lambda": lam, "exact_dp": exact, "closed": laplace_closed(r, lam), "limit": laplace_limit(lam)},
            ))
        tails = empirical_tail(values, p["tail_points"])
        pts = [(y, t) for y, t in zip(p["tail_points"], tails) if t > 0]
        if len(pts) >= 3:
            slope, slope_se = loglog_slope([y for y, _ in pts], [t for _, t in pts])
            out.append({"statistic": "upper tail slope", "empirical": slope, "stderr": slope_se,
                        "oracle": p["tail_slope"], "z": None,
                        "pass": bool(abs(slope - p["tail_slope"]) <= p["tail_tol"])})
        if p["limit_r"]:
            value = laplace_exact(p["limit_r"], 1.0)
            out.append({"statistic": f"laplace_exact({p['limit_r']},1)", "empirical": value, "stderr": None,
                        "oracle": laplace_limit(1.0), "z": None,
                        "pass": bool(abs(value - laplace_limit(1.0)) <= p["limit_tol"])})
        return out
