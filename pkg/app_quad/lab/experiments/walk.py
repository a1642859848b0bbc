"""Процесс меток вдоль случайного блуждания и инвариантность перекоренения."""
from __future__ import annotations

import logging
from typing import Any, Dict, List

from app_quad.errors import LeftSafeRegion
from app_quad.lab.experiments.base import Experiment, require
from app_quad.lab.stats import check_row, median, proportion
from app_quad.lab.types import Row, SummaryRow
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import extend_kesten, sample_eta, sample_kesten_truncated
from app_quad.schaeffer.construct import window_map
from app_quad.trees.spine import SpineHitsLevel
from app_quad.walk.random_walk import (
    LabelProcess,
    label_process,
    returns_by_length,
    stationarity_gap,
    stationarity_table,
    walk,
)
from app_quad.walk.rerooting import THETA_EXACT_MAX_N, theta_invariance_test

log = logging.getLogger(__name__)

WINDOW = 4


def _window_key(proc: LabelProcess, shift: int) -> str:
    table = stationarity_table([proc], shift, WINDOW)
    if not table:
        return ""
    (key,) = table
    return "".join("+" if d > 0 else "-" for d in key)


def walk_on_uipq(steps: int, level: int, rng: RngStream, max_deepenings: int):
    """
    Блуждание на окне до σ_level. При выходе из сертифицированной области
    окно удваивается и блуждание запускается заново новым подпотоком.
    Возвращает (след, окно, число углублений).
    """
    st = sample_kesten_truncated(SpineHitsLevel(level), rng)
    eta = sample_eta(rng)
    attempt = 0
    while True:
        wq = window_map(st, eta)
        try:
            return walk(wq, steps, rng.spawn(attempt)), wq, attempt
        except LeftSafeRegion as e:
            if attempt >= max_deepenings:
                raise
            level *= 2
            attempt += 1
            log.debug("walk left the window at step %s, deepening to %s", e.step, level)
            st = extend_kesten(st, SpineHitsLevel(level), rng)


class WalkLabels(Experiment):
    name = "walk-labels"
    help = "ℓ(X_n) вдоль блуждания: первый шаг, снос, возвраты, стационарность приращений."
    defaults = {
        "steps": 1000,
        "level": 20,
        "lengths": [100, 1000],
        "shifts": [1, 5],
        "drift_threshold": 0.02,
        "stationarity_sigmas": 4.0,
        "max_deepenings": 4,
    }

    def check(self, p: Dict[str, Any]) -> None:
        require(p["steps"] >= WINDOW + max(p["shifts"], default=0), "steps too short for the stationarity windows")
        require(p["level"] >= 1, "level must be ≥ 1")
        require(all(1 <= n <= p["steps"] for n in p["lengths"]), "lengths must lie in [1, steps]")
        require(p["lengths"] == sorted(p["lengths"]), "lengths must be increasing")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        trace, wq, deepenings = walk_on_uipq(p["steps"], p["level"], rng, p["max_deepenings"])
        proc = label_process(trace, wq.labels)
        row: Row = {
            "first_increment": proc.first_increment,
            "drift": proc.drift,
            "max_excursion": proc.max_excursion,
            "deepenings": deepenings,
        }
        for n, k in zip(p["lengths"], returns_by_length(proc, p["lengths"])):
            row[f"returns_{n}"] = k
        for shift in [0] + list(p["shifts"]):
            row[f"win_{shift}"] = _window_key(proc, shift)
        return row

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        est, se = proportion(sum(1 for r in rows if r["first_increment"] == 1), n)
        out: List[SummaryRow] = [check_row("P(first increment=+1)", est, se, 0.5)]
        med = median(r["drift"] for r in rows)
        out.append({"statistic": "median |l(X_N)|/N", "empirical": med, "stderr": None,
                    "oracle": p["drift_threshold"], "z": None, "pass": bool(med < p["drift_threshold"]),
                    "steps": p["steps"]})
        medians = [median(r[f"returns_{k}"] for r in rows) for k in p["lengths"]]
        for k, m in zip(p["lengths"], medians):
            out.append({"statistic": f"median returns by {k}", "empirical": m, "stderr": None, "oracle": None,
                        "z": None, "pass": None, "N": k})
        if len(medians) >= 2:
            out.append({"statistic": "returns median grows", "empirical": medians[-1] - medians[0], "stderr": None,
                        "oracle": None, "z": None, "pass": bool(medians[-1] > medians[0])})
        base = _tally(rows, "win_0")
        for shift in p["shifts"]:
            gap = stationarity_gap(base, _tally(rows, f"win_{shift}"))
            out.append({"statistic": f"stationarity gap shift {shift}", "empirical": gap, "stderr": None,
                        "oracle": 0.0, "z": gap, "pass": bool(gap <= p["stationarity_sigmas"]), "shift": shift})
        return out


def _tally(rows: List[Row], key: str) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for r in rows:
        w = r[key]
        if w:
            out[w] = out.get(w, 0) + 1
    return out


class Theta(Experiment):
    name = "theta"
    help = "Точная проверка Θ⁽¹⁾(νₙ) = νₙ и инвариантности при обращении корня."
    defaults = {"ns": [1, 2]}
    exhaustive = True

    def check(self, p: Dict[str, Any]) -> None:
        require(bool(p["ns"]) and all(1 <= n <= THETA_EXACT_MAX_N for n in p["ns"]),
                f"ns must lie in [1, {THETA_EXACT_MAX_N}]")

    def replica_count(self, p: Dict[str, Any], replicas: int) -> int:
        return len(p["ns"])

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        rep = theta_invariance_test(p["ns"][replica])
        return {"n": rep.n, "maps": rep.maps, "invariant": rep.invariant,
                "reversal_invariant": rep.reversal_invariant, "max_deviation": str(rep.max_deviation())}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        return [
            {"statistic": f"theta n={r['n']}", "empirical": r["max_deviation"], "stderr": None, "oracle": "0",
             "z": None, "pass": bool(r["invariant"] and r["reversal_invariant"]), "n": r["n"], "maps": r["maps"]}
            for r in rows
        ]
