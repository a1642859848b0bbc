import math

import pytest

from app_quad.errors import DomainError, NoConvergence
from app_quad.horoball.laplace import laplace_closed, laplace_exact, laplace_limit, w_cdf_small, w_tail


# ---------- оракулы ----------

@pytest.mark.parametrize("r, lam", [(5, 0.5), (10, 1.0), (40, 2.0)])
def test_dp_matches_closed_form(r, lam):
    assert laplace_exact(r, lam, tol=1e-11, max_top=1 << 20) == pytest.approx(laplace_closed(r, lam), abs=1e-7)


def test_large_r_near_limit():
    assert abs(laplace_exact(200, 1.0) - 1 / 8) < 0.01


def test_uses_configured_tolerance(settings):
    settings.QUAD_LAPLACE_MAX_TOP = 100
    with pytest.raises(NoConvergence):
        laplace_exact(40, 1.0)


def test_limit():
    assert laplace_limit(0) == 1.0
    assert laplace_limit(1.0) == pytest.approx(1 / 8)
    assert laplace_limit(4.0) == pytest.approx(1 / 27)


def test_monotone_in_lambda():
    values = [laplace_closed(20, lam) for lam in (0.25, 0.5, 1.0, 2.0)]
    assert values == sorted(values, reverse=True)
    assert all(0 < v < 1 for v in values)


@pytest.mark.parametrize("lam", [0.0, -1.0])
def test_rejects_non_positive_lambda(lam):
    with pytest.raises(DomainError):
        laplace_exact(10, lam)
    with pytest.raises(DomainError):
        laplace_closed(10, lam)


# ---------- асимптотики W ----------

def test_w_asymptotics():
    assert w_tail(4.0) == pytest.approx(1.5 / math.sqrt(math.pi))
    assert w_cdf_small(0.01) == pytest.approx(4 / (3 * math.sqrt(math.pi)) * 1e-3)
    with pytest.raises(DomainError):
        w_tail(0)
    with pytest.raises(DomainError):
        w_cdf_small(-1)
