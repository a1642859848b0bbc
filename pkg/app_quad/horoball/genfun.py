"""
Производящие функции f_{l,−r}(x) = E_{ρ_l}[x^{|Y(−r)|}].

Рекурсия 2f_l = 1 + f_l (f_{l−1} + f_l + f_{l+1}) / 3 с f_{−r} = x имеет
ограниченное решение

    f_{l,−r}(x) = 1 − 2 / ((l + r + a)(l + r + 1 + a)),   a(a + 1) = 2 / (1 − x),

и сохраняет величину F(2f_l, 2f_{l+1}) = −4/3.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import solve_banded

from app_quad.errors import DomainError, NoConvergence

log = logging.getLogger(__name__)


def a_of_x(x: float) -> float:
    if not 0 <= x < 1:
        raise DomainError(f"a(x) is defined for 0 ≤ x < 1, got {x}")
    return (-1.0 + math.sqrt(1.0 + 8.0 / (1.0 - x))) / 2.0


def genfun_f(l: int, r: int, x: float, limit_at_one: bool = False) -> float:
    """f_{l,−r}(x); при x = 1 — предел 1.0, если limit_at_one."""
    if r < 1:
        raise DomainError("r must be ≥ 1")
    if l < -r:
        raise DomainError(f"label {l} is below the level −{r}")
    if x == 1:
        if limit_at_one:
            return 1.0
        raise DomainError("x = 1 is a limiting case; pass limit_at_one=True")
    a = a_of_x(x)
    n = l + r
    return 1.0 - 2.0 / ((n + a) * (n + 1 + a))


def F_invariant(x: float, y: float) -> float:
    return x * y * (1 - x / 12 - y / 12) - x - y


@dataclass(frozen=True)
class GenFunTable:
    r: int
    x: float
    a: float
    values: np.ndarray  # values[i] = f_{−r+i,−r}(x)

    def at(self, l: int) -> float:
        return float(self.values[l + self.r])

    @property
    def top(self) -> int:
        return -self.r + len(self.values) - 1


def genfun_table(r: int, x: float, top: int) -> GenFunTable:
    if top < -r:
        raise DomainError("top label must be ≥ −r")
    a = a_of_x(x)
    n = np.arange(top + r + 1, dtype=float)
    values = 1.0 - 2.0 / ((n + a) * (n + 1 + a))
    return GenFunTable(r, x, a, values)


def recursion_residual(values: np.ndarray) -> np.ndarray:
    """2f_l − 1 − f_l (f_{l−1} + f_l + f_{l+1}) / 3 во внутренних точках."""
    f = np.asarray(values, dtype=float)
    mid = f[1:-1]
    return 2 * mid - 1 - mid * (f[:-2] + mid + f[2:]) / 3


def invariant_defect(values: np.ndarray) -> np.ndarray:
    """F(2f_l, 2f_{l+1}) + 4/3 для соседних пар."""
    f = 2 * np.asarray(values, dtype=float)
    return F_invariant(f[:-1], f[1:]) + 4.0 / 3.0


def solve_recursion(r: int, x: float, top: int, top_value: Optional[float] = None,
                    tol: float = 1e-12, max_iter: int = 200) -> np.ndarray:
    """
    Решает рекурсию методом Ньютона с условиями f_{−r} = x и f_top = top_value
    (по умолчанию — значение замкнутой формулы). Якобиан трёхдиагональный.
    """
    if top <= -r + 1:
        raise DomainError("need at least one interior label")
    if top_value is None:
        top_value = genfun_f(top, r, x)
    n = top + r + 1
    f = np.linspace(x, top_value, n)
    for it in range(max_iter):
        res = recursion_residual(f)
        norm = float(np.max(np.abs(res)))
        if norm < tol:
            log.debug("newton converged in %s iterations", it)
            return f
        mid = f[1:-1]
        diag = 2 - (f[:-2] + 2 * mid + f[2:]) / 3
        off = -mid / 3
        ab = np.zeros((3, n - 2))
        ab[0, 1:] = off[:-1]
        ab[1, :] = diag
        ab[2, :-1] = off[1:]
        step = solve_banded((1, 1), ab, -res)
        t = 1.0
        while t > 1e-6:
            trial = f.copy()
            trial[1:-1] = mid + t * step
            if float(np.max(np.abs(recursion_residual(trial)))) < norm:
                f = trial
                break
            t /= 2
        else:
            break
    raise NoConvergence(f"recursion solve did not reach tolerance {tol}")
