import numpy as np
import pytest

from app_quad.errors import DomainError
from app_quad.horoball.genfun import (
    a_of_x,
    genfun_f,
    genfun_table,
    invariant_defect,
    recursion_residual,
    solve_recursion,
)


# ---------- замкнутая форма ----------

def test_a_of_x():
    assert a_of_x(0.0) == pytest.approx(1.0)
    a = a_of_x(0.6)
    assert a * (a + 1) == pytest.approx(2 / 0.4)
    for bad in (1.0, -0.1, 2.0):
        with pytest.raises(DomainError):
            a_of_x(bad)


@pytest.mark.parametrize("x", [0.0, 0.3, 0.9])
def test_boundary_value(x):
    assert genfun_f(-5, 5, x) == pytest.approx(x)


def test_limit_at_one():
    assert genfun_f(3, 5, 1, limit_at_one=True) == 1.0
    with pytest.raises(DomainError):
        genfun_f(3, 5, 1)


def test_domain_errors():
    with pytest.raises(DomainError):
        genfun_f(0, 0, 0.5)
    with pytest.raises(DomainError):
        genfun_f(-6, 5, 0.5)
    with pytest.raises(DomainError):
        genfun_table(5, 0.5, -7)


def test_values_increase_to_one():
    t = genfun_table(4, 0.2, 200)
    assert t.at(-4) == pytest.approx(0.2)
    assert t.top == 200
    assert np.all(np.diff(t.values) > 0)
    assert t.values[-1] < 1.0


# ---------- рекурсия и инвариант ----------

def test_closed_form_solves_recursion():
    t = genfun_table(6, 0.45, 80)
    assert np.max(np.abs(recursion_residual(t.values))) < 1e-12


def test_invariant_is_conserved():
    t = genfun_table(3, 0.7, 60)
    assert np.max(np.abs(invariant_defect(t.values))) < 1e-10


def test_newton_matches_closed_form():
    f = solve_recursion(5, 0.4, 30)
    assert np.max(np.abs(f - genfun_table(5, 0.4, 30).values)) < 1e-7


def test_newton_needs_interior():
    with pytest.raises(DomainError):
        solve_recursion(5, 0.4, -4)
