import pytest

from app_quad.maps.rooted_map import build_map
from app_quad.sampling.rng import RngStream
from app_quad.trees.treefile import loads_tree

SEED = 20240601


# --- детерминированные потоки ГПСЧ ---
@pytest.fixture
def rng_factory():
    def _make(stream: int = 0, seed: int = SEED):
        return RngStream(seed, stream)

    return _make


@pytest.fixture
def rng(rng_factory):
    return rng_factory(0)


# --- квадрангуляция с одной гранью: путь a-b-c, корень a→b ---
@pytest.fixture
def path_map():
    return build_map([1, 0, 3, 2], [0, 2, 1, 3], 0)


# --- маленькое дерево из 𝕋⁽⁰⁾₃ ---
@pytest.fixture
def small_tree():
    return loads_tree("(0 (-1) (0 (1)))")


# --- выходной каталог экспериментов во временной папке ---
@pytest.fixture
def quad_out(settings, tmp_path):
    settings.QUAD_OUTPUT_ROOT = str(tmp_path / "experiments")
    return tmp_path / "experiments"
