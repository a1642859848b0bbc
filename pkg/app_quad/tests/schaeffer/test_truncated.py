import pytest

from app_quad.errors import ConfigError, InsufficientCertification
from app_quad.sampling.samplers import sample_kesten_truncated
from app_quad.schaeffer.construct import certified_radius_of, deepen_and_ball, phi_truncated, window_map
from app_quad.trees.spine import SpineHitsLevel, SpineSteps


@pytest.fixture
def level5(rng):
    return sample_kesten_truncated(SpineHitsLevel(5), rng)


# ---------- окно ----------

@pytest.mark.parametrize("eta", [0, 1])
def test_window_map_shape(level5, eta):
    wq = window_map(level5, eta)
    m = wq.map
    assert wq.quad.certified_radius == 2
    assert wq.labels[wq.root_vertex] == 0
    assert wq.quad.hole_faces
    for d in range(m.n_darts):
        assert abs(wq.labels[m.tail(d)] - wq.labels[m.head(d)]) == 1
    for v, ok in enumerate(wq.complete):
        if ok:
            assert wq.labels[v] > -5


def test_window_map_eta(level5):
    with pytest.raises(ValueError):
        window_map(level5, 2)


def test_margin_from_settings(settings, level5):
    assert certified_radius_of(level5) == 2
    settings.QUAD_TRUNCATION_MARGIN = 4
    assert certified_radius_of(level5) == 1


# ---------- шар с сертификатом ----------

def test_phi_truncated_needs_depth(rng):
    st = sample_kesten_truncated(SpineHitsLevel(4), rng)
    with pytest.raises(InsufficientCertification):
        phi_truncated(st, 0, 2, rng)


def test_phi_truncated_needs_level_rule(rng):
    st = sample_kesten_truncated(SpineSteps(6), rng)
    with pytest.raises(ConfigError):
        phi_truncated(st, 0, 1, rng)


def test_deepen_and_ball(rng_factory):
    rng = rng_factory(11)
    st = sample_kesten_truncated(SpineHitsLevel(2), rng)
    sb = deepen_and_ball(st, 1, 2, rng)
    assert sb.certificate.stable
    assert sb.certificate.radius == 2
    assert sb.tree.stop.level >= 10
    assert 0 <= sb.deepenings <= 4
    assert sb.ball.code == sb.certificate.code
