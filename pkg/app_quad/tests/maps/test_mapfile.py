import pytest

from app_quad.errors import MalformedMapFile
from app_quad.maps.holes import QuadrangulationWithHoles
from app_quad.maps.mapfile import dumps_map, loads_map, read_map, write_map


# ---------- запись и чтение ----------

def test_dump_is_stable(path_map):
    text = dumps_map(path_map, pointed=2)
    assert text.splitlines()[0] == "MAP 4 0"
    assert "POINTED 2" in text
    rec = loads_map(text)
    assert rec.pointed == 2
    assert dumps_map(rec.quad, pointed=rec.pointed) == text


def test_holes_and_certificate(path_map, tmp_path):
    q = QuadrangulationWithHoles(path_map, frozenset({0}), 3)
    path = write_map(tmp_path / "q.map", q)
    rec = read_map(path)
    assert rec.quad.hole_faces == frozenset({0})
    assert rec.quad.certified_radius == 3
    assert rec.pointed is None


def test_comments_ignored(path_map):
    text = "# пример\n" + dumps_map(path_map) + "\n# конец\n"
    assert loads_map(text).quad.map.n_darts == 4


# ---------- ошибки формата ----------

@pytest.mark.parametrize(
    "text",
    [
        "DART 0 1 0\n",
        "MAP 2 0\nDART 0 1 0\nDART 0 1 0\n",
        "MAP 2 0\nDART 0 1 0\n",
        "MAP 2 0\nDART 0 1 0\nDART 1 0 1\nFOO 1\n",
        "MAP 2 0\nDART 0 1 0\nDART 1 0 1\nHOLE 5\n",
        "MAP 2 0\nDART 0 0 0\nDART 1 1 1\n",
    ],
)
def test_malformed(text):
    with pytest.raises(MalformedMapFile):
        loads_map(text)
