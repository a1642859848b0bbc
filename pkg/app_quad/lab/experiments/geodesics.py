"""
Геодезические в UIPQ: множества встреч R и R′, хвосты дефицитов, точки
разреза, метки из метрики, слияние геодезических и сертификаты шаров.

Дефициты Δ_j (и Δ′_m) независимы и одинаково распределены, поэтому на
больших горизонтах они разыгрываются напрямую: Δ_j — по дереву ρ₀,
который растёт только до первой метки, уже не влияющей на R ∩ [0, horizon].
"""
from __future__ import annotations

from typing import Any, Dict, List, Tuple

from app_quad.geometry.geodesics import (
    cut_points,
    delta_tail,
    exact_meeting_probability,
    meeting_sets,
    set_from_deficits,
)
from app_quad.geometry.metric_labels import confluence_check, infer_labels_from_metric
from app_quad.lab.experiments.base import Experiment, require
from app_quad.lab.stats import check_row, loglog_slope, mean_se, proportion, rate_row
from app_quad.lab.types import Row, SummaryRow
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import (
    sample_eta,
    sample_excursion_floor,
    sample_gw_floor,
    sample_kesten_truncated,
)
from app_quad.schaeffer.construct import deepen_and_ball, window_map
from app_quad.trees.spine import SpineHitsLevel

METHODS = ("deficits", "window")


def sample_deficit(rng: RngStream, cap_level: int) -> Tuple[int, bool]:
    """
    min(Δ, cap_level), Δ = −min ℓ по дереву ρ₀, и признак цензуры: при
    исчерпании лимита вершин значение — нижняя граница Δ.
    """
    res = sample_gw_floor(0, rng, -cap_level)
    return min(-res.low, cap_level), res.censored


def sample_prime_deficit(rng: RngStream, cap_level: int) -> Tuple[int, bool]:
    """min(Δ′, cap_level), Δ′ = −min ℓ по лесу L_0, …, L_{σ₁−1}; цензура как у sample_deficit."""
    res = sample_excursion_floor(rng, -cap_level)
    return min(max(0, -res.low), cap_level), res.censored


def censored_row(rows: List[Row], draws: int) -> SummaryRow:
    """Доля розыгрышей, упёршихся в лимит вершин: их значения взяты как нижние границы."""
    total = sum(int(r.get("censored") or 0) for r in rows)
    share = total / (draws * len(rows)) if rows else 0.0
    return {"statistic": "censored draws", "empirical": share, "stderr": None, "oracle": 0.0,
            "z": None, "pass": None, "count": total}


class RDensity(Experiment):
    name = "r-density"
    help = "Плотность множества встреч R и P(i ∈ R) против (i+3)/(3(i+1))."
    defaults = {"horizon": 2000, "method": "deficits", "probes": [1, 2, 5, 10, 50], "density_tol": 0.02}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["horizon"] >= 1, "horizon must be ≥ 1")
        require(p["method"] in METHODS, f"method must be one of {METHODS}")
        require(all(0 <= i <= p["horizon"] for i in p["probes"]), "probes must lie in [0, horizon]")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        h = p["horizon"]
        if p["method"] == "deficits":
            draws = [sample_deficit(rng, h - j) for j in range(h)]
            censored = sum(1 for _, c in draws if c)
            R = set(set_from_deficits([d for d, _ in draws], h))
        else:
            st = sample_kesten_truncated(SpineHitsLevel(h + 2), rng)
            censored = 0
            R = set(meeting_sets(st, h).R)
        row: Row = {"density": len(R) / (h + 1), "censored": censored}
        for i in p["probes"]:
            row[f"in_R_{i}"] = i in R
        return row

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        mean, se = mean_se(r["density"] for r in rows)
        target = 1 / 3
        out: List[SummaryRow] = [{
            "statistic": "density", "empirical": mean, "stderr": se, "oracle": target, "z": None,
            "pass": bool(abs(mean - target) <= p["density_tol"]), "horizon": p["horizon"],
        }]
        for i in p["probes"]:
            est, se_i = proportion(sum(1 for r in rows if r[f"in_R_{i}"]), n)
            out.append(check_row(f"P({i} in R)", est, se_i, float(exact_meeting_probability(i)), i=i))
        if p["method"] == "deficits":
            out.append(censored_row(rows, p["horizon"]))
        return out


class DeltaTail(Experiment):
    name = "delta-tail"
    help = "P(Δ₀ ≥ m) против 2/((m+1)(m+2))."
    defaults = {"m_values": [1, 2, 5, 10]}

    def check(self, p: Dict[str, Any]) -> None:
        require(bool(p["m_values"]) and min(p["m_values"]) >= 1, "m_values must be positive")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        delta, censored = sample_deficit(rng, max(p["m_values"]))
        return {"delta": delta, "censored": int(censored)}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        out = []
        for m in p["m_values"]:
            est, se = proportion(sum(1 for r in rows if r["delta"] >= m), n)
            out.append(check_row(f"P(delta>={m})", est, se, float(delta_tail(m)), m=m))
        out.append(censored_row(rows, 1))
        return out


class DeltaPrimeTail(Experiment):
    name = "delta-prime-tail"
    help = "m·P(Δ′₀ ≥ m) → 2 и убывание P(i ∈ R′) как i⁻²."
    defaults = {"m": 50, "horizon": 200, "probes": [10, 20, 50, 100, 200],
                "scaled_range": [1.8, 2.2], "slope_range": [-2.4, -1.6]}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["m"] >= 1, "m must be ≥ 1")
        require(p["horizon"] >= 1, "horizon must be ≥ 1")
        require(all(1 <= i <= p["horizon"] for i in p["probes"]), "probes must lie in [1, horizon]")
        require(len(p["scaled_range"]) == 2 and len(p["slope_range"]) == 2, "ranges need two bounds")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        h = p["horizon"]
        draws = [sample_prime_deficit(rng, max(p["m"], h))]
        draws += [sample_prime_deficit(rng, h - j) for j in range(1, h)]
        Rp = set(set_from_deficits([d for d, _ in draws], h))
        row: Row = {"delta_prime": draws[0][0], "censored": sum(1 for _, c in draws if c)}
        for i in p["probes"]:
            row[f"in_Rp_{i}"] = i in Rp
        return row

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        m = p["m"]
        est, se = proportion(sum(1 for r in rows if r["delta_prime"] >= m), n)
        lo, hi = p["scaled_range"]
        out: List[SummaryRow] = [{
            "statistic": f"{m}*P(delta'>={m})", "empirical": m * est, "stderr": m * se, "oracle": 2.0,
            "z": None, "pass": bool(lo <= m * est <= hi), "m": m,
        }]
        probs = []
        for i in p["probes"]:
            pi, se_i = proportion(sum(1 for r in rows if r[f"in_Rp_{i}"]), n)
            probs.append(pi)
            out.append({"statistic": f"P({i} in R')", "empirical": pi, "stderr": se_i, "oracle": None,
                        "z": None, "pass": None, "i": i})
        slope, slope_se = loglog_slope(p["probes"], probs)
        lo, hi = p["slope_range"]
        out.append({"statistic": "R' log-log slope", "empirical": slope, "stderr": slope_se, "oracle": -2.0,
                    "z": None, "pass": bool(lo <= slope <= hi)})
        out.append(censored_row(rows, p["horizon"]))
        return out


class CutPointsExperiment(Experiment):
    name = "cut-points"
    help = "Точки разреза собственных геодезических до горизонта."
    defaults = {"horizon": 50}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["horizon"] >= 2, "horizon must be ≥ 2")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        h = p["horizon"]
        st = sample_kesten_truncated(SpineHitsLevel(h + 2), rng)
        cp = cut_points(st, h)
        return {"points": len(cp.points), "first_time": cp.times[0] if cp.times else -1,
                "last_spine_hit": cp.last_spine_hit, "i0": cp.i0}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        mean, se = mean_se(r["points"] for r in rows)
        return [
            {"statistic": "mean cut points", "empirical": mean, "stderr": se, "oracle": None, "z": None,
             "pass": None, "horizon": p["horizon"]},
            {"statistic": "share with cut point", "empirical": sum(1 for r in rows if r["points"] > 0) / n,
             "stderr": None, "oracle": None, "z": None, "pass": None},
        ]


class _WindowExperiment(Experiment):
    """Общая часть экспериментов на окне до σ_M."""

    def window(self, level: int, rng: RngStream):
        st = sample_kesten_truncated(SpineHitsLevel(level), rng)
        return window_map(st, sample_eta(rng))

    def pass_threshold(self, p: Dict[str, Any]) -> float:
        if p["threshold"] >= 0:
            return p["threshold"]
        from app_quad.lab.config import pass_rate
        return pass_rate()


class Eq4(_WindowExperiment):
    name = "eq4"
    help = "Метки из метрики: мода d(u,z) − d(v,z) = ℓ(u) − ℓ(v) на шаре радиуса 3."
    defaults = {"level": 40, "radius": 3, "far_level": -20, "max_witnesses": 64, "threshold": -1.0}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["radius"] <= p["level"] - 3, "radius must not exceed level − 3")
        require(p["far_level"] > -p["level"], "far_level must lie above the window floor")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        wq = self.window(p["level"], rng)
        inf = infer_labels_from_metric(wq, p["radius"], p["far_level"], p["max_witnesses"])
        return {"pairs": inf.pairs, "agreement": inf.pair_agreement, "all_agree": inf.pair_agreement == 1.0,
                "witnesses": inf.witnesses, "eta_matches": bool(inf.eta_matches)}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        thr = self.pass_threshold(p)
        return [
            rate_row("all pairs agree", sum(1 for r in rows if r["all_agree"]), n, thr),
            rate_row("root end recovered", sum(1 for r in rows if r["eta_matches"]), n, thr),
        ]


class Confluence(_WindowExperiment):
    name = "confluence"
    help = "Слияние геодезических к ∂: λ(z) = R + d(Γ(R), z) вне шара радиуса R′."
    defaults = {"R": 5, "radius": 25, "threshold": -1.0}

    def check(self, p: Dict[str, Any]) -> None:
        require(1 <= p["R"] < p["radius"], "need 1 ≤ R < radius")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        wq = self.window(p["radius"] + 3, rng)
        witness = confluence_check(wq, p["R"], p["radius"])
        if witness is None:
            return {"found": False, "R_prime": -1, "checked": 0}
        return {"found": True, "R_prime": witness.R_prime, "checked": witness.checked}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        out = [rate_row("confluence found", sum(1 for r in rows if r["found"]), n, self.pass_threshold(p))]
        found = [r["R_prime"] for r in rows if r["found"]]
        if len(found) >= 2:
            mean, se = mean_se(found)
            out.append({"statistic": "mean R'", "empirical": mean, "stderr": se, "oracle": None,
                        "z": None, "pass": None})
        return out


class Stabilization(Experiment):
    name = "stabilization"
    help = "Доля шаров, стабильных при удвоении окна с M = r + 3."
    defaults = {"r": 10, "threshold": 0.999}

    def check(self, p: Dict[str, Any]) -> None:
        require(p["r"] >= 1, "r must be ≥ 1")
        require(0 <= p["threshold"] <= 1, "threshold must be in [0, 1]")

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        r = p["r"]
        st = sample_kesten_truncated(SpineHitsLevel(r + 3), rng)
        sb = deepen_and_ball(st, sample_eta(rng), r, rng)
        return {"deepenings": sb.deepenings, "stable_first": sb.deepenings == 0,
                "faces": sb.ball.map.n_faces - len(sb.ball.hole_faces)}

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        n = len(rows)
        out = [rate_row("stable at M=r+3", sum(1 for r in rows if r["stable_first"]), n, p["threshold"])]
        mean, se = mean_se(r["faces"] for r in rows) if n >= 2 else (float(rows[0]["faces"]), 0.0)
        out.append({"statistic": "mean inner faces", "empirical": mean, "stderr": se, "oracle": None,
                    "z": None, "pass": None, "r": p["r"]})
        return out

