"""
Преобразование Лапласа размера разделяющего цикла.

    E[exp(−2λ|∂F_{−r}|/r²)] = x · h(0),   x = exp(−2λ/r²),

где h(−r) = 1 и h(l) = f_{l,−r}(x)² (h(l−1) + h(l) + h(l+1)) / 3 при l > −r.
Точное значение считается прогонкой на отрезке [−r, L] с отражающим верхом
h(L+1) = h(L); L удваивается до стабилизации. Ограниченное решение
выражается явно через H(n) = 1/n² − 1/(n+1)²: h(l) = H(l + r + a) / H(a).
"""
from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np
from scipy.linalg import solve_banded

from app_quad.errors import DomainError, NoConvergence
from app_quad.horoball.genfun import a_of_x, genfun_table

log = logging.getLogger(__name__)


def _x_of(r: int, lam: float) -> float:
    if r < 1:
        raise DomainError("r must be ≥ 1")
    if lam <= 0:
        raise DomainError(f"λ must be positive, got {lam}")
    return math.exp(-2.0 * lam / (r * r))


def _dp_value(r: int, x: float, top: int) -> float:
    f2 = genfun_table(r, x, top).values[1:] ** 2  # l = −r+1 … top
    n = f2.shape[0]
    c = f2 / 3.0
    diag = 1.0 - c
    diag[-1] = 1.0 - 2.0 * c[-1]
    ab = np.zeros((3, n))
    ab[0, 1:] = -c[:-1]
    ab[1, :] = diag
    ab[2, :-1] = -c[1:]
    rhs = np.zeros(n)
    rhs[0] = c[0]
    h = solve_banded((1, 1), ab, rhs)
    return float(h[r - 1])  # h(0)


def laplace_exact(r: int, lam: float, top: Optional[int] = None,
                  tol: Optional[float] = None, max_top: Optional[int] = None) -> float:
    x = _x_of(r, lam)
    if tol is None or max_top is None:
        from app_quad.lab.config import laplace_max_top, laplace_tol
        tol = laplace_tol() if tol is None else tol
        max_top = laplace_max_top() if max_top is None else max_top
    L = top if top is not None else max(8 * r, 64)
    prev = _dp_value(r, x, L)
    while True:
        L *= 2
        if L > max_top:
            raise NoConvergence(f"Laplace DP for r={r}, λ={lam} did not settle below top {max_top}")
        cur = _dp_value(r, x, L)
        if abs(cur - prev) < tol:
            log.debug("laplace_exact r=%s λ=%s settled at top=%s", r, lam, L)
            return x * cur
        prev = cur


def _H(n: float) -> float:
    return 1.0 / (n * n) - 1.0 / ((n + 1) * (n + 1))


def laplace_closed(r: int, lam: float) -> float:
    x = _x_of(r, lam)
    a = a_of_x(x)
    return x * _H(r + a) / _H(a)


def laplace_limit(lam: float) -> float:
    """(1 + √λ)^{−3}."""
    if lam < 0:
        raise DomainError("λ must be non-negative")
    return (1.0 + math.sqrt(lam)) ** -3


def w_tail(y: float) -> float:
    """Асимптотика P(W ≥ y) ~ 3/√π · y^{−1/2} при y → ∞."""
    if y <= 0:
        raise DomainError("y must be positive")
    return 3.0 / math.sqrt(math.pi) / math.sqrt(y)


def w_cdf_small(y: float) -> float:
    """Асимптотика P(W ≤ y) ~ 4/(3√π) · y^{3/2} при y → 0."""
    if y <= 0:
        raise DomainError("y must be positive")
    return 4.0 / (3.0 * math.sqrt(math.pi)) * y ** 1.5
