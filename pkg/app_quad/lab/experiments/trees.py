"""Законы деревьев: ρ₀, спина дерева Кестена, равномерное дерево из 𝕋⁽⁰⁾ₙ."""
from __future__ import annotations

import math
from collections import Counter as TallyCounter
from typing import Any, Dict, List

from scipy import stats as sps

from app_quad.lab.experiments.base import Experiment, require
from app_quad.lab.stats import check_row, mean_se, proportion
from app_quad.lab.types import Row, SummaryRow
from app_quad.sampling.enumeration import labeled_trees
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import sample_gw, sample_kesten_truncated, sample_uniform_tree
from app_quad.trees.spine import SpineSteps

MODES = ("gw", "kesten", "uniform")
CHI2_MAX_N = 3
GW_SIZE_MAX = 3


class TreeLaw(Experiment):
    name = "tree-law"
    help = "Проверка законов выборки деревьев (gw, kesten, uniform)."
    defaults = {"mode": "gw", "K": 50, "n": 2, "min_pvalue": 0.001}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["mode"] in MODES, f"mode must be one of {MODES}")
        require(p["K"] >= 1, "K must be ≥ 1")
        require(p["n"] >= 1, "n must be ≥ 1")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        if p["mode"] == "gw":
            t = sample_gw(0, rng)
            return {"size": t.size, "root_children": len(t.children[0]), "min_label": t.min_label, "height": t.height}
        if p["mode"] == "kesten":
            st = sample_kesten_truncated(SpineSteps(p["K"]), rng)
            return {"spine_end": st.spine[-1], "first_step": st.spine[1] - st.spine[0],
                    "vertices": st.vertex_count, "left_root_children": len(st.left[0].children[0])}
        t = sample_uniform_tree(p["n"], rng)
        return {"tree": t.key, "min_label": t.min_label}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        mode = p["mode"]
        n = len(rows)
        out: List[SummaryRow] = []
        if mode == "gw":
            for k in range(4):
                est, se = proportion(sum(1 for r in rows if r["root_children"] == k), n)
                out.append(check_row(f"P(children={k})", est, se, 2.0 ** -(k + 1), k=k))
            # P(|τ| = s) = Cat(s)·2^{−(2s+1)}
            for s in range(GW_SIZE_MAX + 1):
                est, se = proportion(sum(1 for r in rows if r["size"] == s), n)
                catalan = math.comb(2 * s, s) // (s + 1)
                out.append(check_row(f"P(size={s})", est, se, catalan * 2.0 ** -(2 * s + 1), size=s))
            return out
        if mode == "kesten":
            for step in (-1, 0, 1):
                est, se = proportion(sum(1 for r in rows if r["first_step"] == step), n)
                out.append(check_row(f"P(X1-X0={step})", est, se, 1 / 3, step=step))
            mean, se = mean_se(r["spine_end"] for r in rows)
            out.append(check_row("E[X_K]", mean, se, 0.0, K=p["K"]))
            mean, se = mean_se(r["spine_end"] ** 2 for r in rows)
            out.append(check_row("E[X_K^2]", mean, se, 2 * p["K"] / 3, K=p["K"]))
            return out
        tally = TallyCounter(r["tree"] for r in rows)
        if p["n"] <= CHI2_MAX_N:
            support = [t.key for t in labeled_trees(p["n"])]
            observed = [tally.get(k, 0) for k in support]
            outside = n - sum(observed)
            res = sps.chisquare(observed)
            out.append({"statistic": "chi2_uniform", "empirical": float(res.statistic), "stderr": None,
                        "oracle": None, "pvalue": float(res.pvalue), "support": len(support),
                        "outside_support": outside, "z": None,
                        "pass": bool(res.pvalue >= p["min_pvalue"] and outside == 0)})
        expected = 3 ** p["n"] * math.comb(2 * p["n"], p["n"]) // (p["n"] + 1)
        out.append({"statistic": "distinct_trees", "empirical": len(tally), "stderr": None,
                    "oracle": expected, "z": None, "pass": None})
        return out
