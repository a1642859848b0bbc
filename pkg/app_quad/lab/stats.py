# app_quad/lab/stats.py
"""
Оценки для сводок: средние со стандартной ошибкой, доли с интервалом
Уилсона, эмпирические преобразования Лапласа и хвосты, наклоны в
логарифмических осях.
"""
from __future__ import annotations

import math
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats as sps


class StatsError(Exception):
    pass


def _array(values: Iterable[float]) -> np.ndarray:
    arr = np.asarray(list(values), dtype=float)
    if arr.ndim != 1:
        raise StatsError("expected a flat sample")
    return arr


def mean_se(values: Iterable[float]) -> Tuple[float, float]:
    x = _array(values)
    if x.shape[0] < 2:
        raise StatsError(f"need at least 2 values, got {x.shape[0]}")
    return float(x.mean()), float(x.std(ddof=1) / math.sqrt(x.shape[0]))


def proportion(k: int, n: int) -> Tuple[float, float]:
    if n <= 0:
        raise StatsError("empty sample")
    p = k / n
    return p, math.sqrt(p * (1 - p) / n)


def wilson_interval(k: int, n: int, confidence: float = 0.95) -> Tuple[float, float]:
    if n <= 0:
        raise StatsError("empty sample")
    z = float(sps.norm.ppf(0.5 + confidence / 2))
    p = k / n
    denom = 1 + z * z / n
    centre = (p + z * z / (2 * n)) / denom
    half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


def z_score(estimate: float, se: float, target: float) -> float:
    if se <= 0:
        return 0.0 if math.isclose(estimate, target, abs_tol=1e-12) else math.inf
    return (estimate - target) / se


def empirical_laplace(values: Iterable[float], lam: float) -> Tuple[float, float]:
    """E[exp(−λ·X)] и его стандартная ошибка."""
    x = _array(values)
    return mean_se(np.exp(-lam * x))


def empirical_tail(values: Iterable[float], thresholds: Sequence[float]) -> List[float]:
    """P̂(X ≥ t) для каждого порога."""
    x = np.sort(_array(values))
    if not x.shape[0]:
        raise StatsError("empty sample")
    n = x.shape[0]
    return [float(n - np.searchsorted(x, t, side="left")) / n for t in thresholds]


def loglog_slope(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float]:
    """Наклон прямой log y ~ log x (только точки с x, y > 0) и его ошибка."""
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    mask = (xa > 0) & (ya > 0)
    if int(mask.sum()) < 3:
        raise StatsError("need at least 3 positive points for a log-log fit")
    fit = sps.linregress(np.log(xa[mask]), np.log(ya[mask]))
    return float(fit.slope), float(fit.stderr)


def median(values: Iterable[float]) -> float:
    x = _array(values)
    if not x.shape[0]:
        raise StatsError("empty sample")
    return float(np.median(x))


def check_row(statistic: str, empirical: float, stderr: Optional[float], oracle: Optional[float],
              sigmas: Optional[float] = None, **extra: Any) -> Dict[str, Any]:
    """Строка сводки: оценка, ошибка, эталон, z и вердикт |z| ≤ sigmas."""
    row: Dict[str, Any] = {"statistic": statistic, "empirical": empirical, "stderr": stderr, "oracle": oracle}
    row.update(extra)
    if oracle is None or stderr is None:
        row["z"] = None
        row["pass"] = None
        return row
    if sigmas is None:
        from app_quad.lab.config import sigma_tolerance
        sigmas = sigma_tolerance()
    z = z_score(empirical, stderr, oracle)
    row["z"] = z if math.isfinite(z) else None
    row["pass"] = bool(abs(z) <= sigmas)
    return row


def rate_row(statistic: str, hits: int, n: int, threshold: float, /, **extra: Any) -> Dict[str, Any]:
    """Доля успехов против порога; интервал Уилсона для справки."""
    p, se = proportion(hits, n)
    lo, hi = wilson_interval(hits, n)
    row: Dict[str, Any] = {"statistic": statistic, "empirical": p, "stderr": se, "oracle": threshold,
                           "wilson_lo": lo, "wilson_hi": hi, "z": None, "pass": bool(p >= threshold)}
    row.update(extra)
    return row
