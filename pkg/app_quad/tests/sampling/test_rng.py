import numpy as np

from app_quad.sampling.rng import RngStream


# ---------- воспроизводимость ----------

def test_same_stream_same_draws():
    a, b = RngStream(7, 3), RngStream(7, 3)
    assert [a.offspring() for _ in range(50)] == [b.offspring() for _ in range(50)]
    assert [a.step() for _ in range(50)] == [b.step() for _ in range(50)]
    assert a.integers(0, 1000) == b.integers(0, 1000)


def test_streams_differ():
    a, b = RngStream(7, 3), RngStream(7, 4)
    assert [a.integers(0, 10**9) for _ in range(5)] != [b.integers(0, 10**9) for _ in range(5)]


def test_spawn_is_independent_and_reproducible():
    parent = RngStream(7, 3)
    child = parent.spawn(1)
    assert child.spawn_key == (3, 1)
    assert RngStream(7, 3).spawn(1).random() == child.random()
    assert parent.spawn(2).random() != RngStream(7, 3).spawn(1).random()



# ---------- законы ----------

def test_offspring_is_geometric(rng):
    ks = np.array([rng.offspring() for _ in range(20_000)])
    assert ks.min() >= 0
    assert abs(ks.mean() - 1.0) < 0.05, "среднее Geom(½) − 1 равно 1"
    assert abs((ks == 0).mean() - 0.5) < 0.02


def test_step_is_uniform(rng):
    xs = np.array([rng.step() for _ in range(30_000)])
    assert set(np.unique(xs).tolist()) == {-1, 0, 1}
    for v in (-1, 0, 1):
        assert abs((xs == v).mean() - 1 / 3) < 0.02
