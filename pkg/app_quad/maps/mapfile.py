"""
Текстовый формат карт.

    MAP <ndarts> <root>
    DART <id> <twin> <next_at_vertex>     (ndarts строк, по возрастанию id)
    HOLE <face-id>                         (номера граней — порядок RootedMap.face_cycles)
    CERT <r>                               (необязательно: сертифицированный радиус)
    POINTED <vertex>                       (необязательно: отмеченная вершина)

Пустые строки и строки с '#' игнорируются. Запись детерминирована,
поэтому чтение и повторная запись дают тот же текст.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, TextIO, Union

from app_quad.errors import MalformedMapFile, QuadError
from app_quad.maps.holes import COMPLETE, QuadrangulationWithHoles, as_quad
from app_quad.maps.rooted_map import RootedMap, build_map


@dataclass(frozen=True)
class MapRecord:
    quad: QuadrangulationWithHoles
    pointed: Optional[int] = None


def dumps_map(q: Union[RootedMap, QuadrangulationWithHoles], pointed: Optional[int] = None) -> str:
    quad = as_quad(q)
    m = quad.map
    lines: List[str] = [f"MAP {m.n_darts} {m.root}"]
    twin = m.twin.tolist()
    sigma = m.sigma.tolist()
    for d in range(m.n_darts):
        lines.append(f"DART {d} {twin[d]} {sigma[d]}")
    for f in sorted(quad.hole_faces):
        lines.append(f"HOLE {f}")
    if quad.certified_radius is not COMPLETE:
        lines.append(f"CERT {quad.certified_radius}")
    if pointed is not None:
        lines.append(f"POINTED {pointed}")
    return "\n".join(lines) + "\n"


def _ints(parts: List[str], n: int, lineno: int) -> List[int]:
    if len(parts) != n + 1:
        raise MalformedMapFile(f"line {lineno}: expected {n} fields after {parts[0]}")
    try:
        return [int(x) for x in parts[1:]]
    except ValueError as e:
        raise MalformedMapFile(f"line {lineno}: non-integer field") from e


def loads_map(text: str) -> MapRecord:
    header = None
    twin: List[Optional[int]] = []
    sigma: List[Optional[int]] = []
    holes = set()
    cert = COMPLETE
    pointed = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0].upper()
        if tag == "MAP":
            if header is not None:
                raise MalformedMapFile(f"line {lineno}: duplicate MAP header")
            header = _ints(parts, 2, lineno)
            twin = [None] * header[0]
            sigma = [None] * header[0]
        elif header is None:
            raise MalformedMapFile(f"line {lineno}: record before MAP header")
        elif tag == "DART":
            d, t, s = _ints(parts, 3, lineno)
            if not 0 <= d < header[0]:
                raise MalformedMapFile(f"line {lineno}: dart {d} out of range")
            if twin[d] is not None:
                raise MalformedMapFile(f"line {lineno}: dart {d} listed twice")
            twin[d], sigma[d] = t, s
        elif tag == "HOLE":
            holes.add(_ints(parts, 1, lineno)[0])
        elif tag == "CERT":
            cert = _ints(parts, 1, lineno)[0]
        elif tag == "POINTED":
            pointed = _ints(parts, 1, lineno)[0]
        else:
            raise MalformedMapFile(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise MalformedMapFile("missing MAP header")
    if any(t is None for t in twin):
        raise MalformedMapFile("some darts are not listed")
    try:
        m = build_map(twin, sigma, header[1])
    except (QuadError, ValueError) as e:
        raise MalformedMapFile(f"invalid map: {e}") from e
    if any(not 0 <= f < m.n_faces for f in holes):
        raise MalformedMapFile("HOLE refers to a missing face")
    if pointed is not None and not 0 <= pointed < m.n_vertices:
        raise MalformedMapFile("POINTED refers to a missing vertex")
    return MapRecord(QuadrangulationWithHoles(m, frozenset(holes), cert), pointed)


def write_map(path: Union[str, Path], q, pointed: Optional[int] = None) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dumps_map(q, pointed), encoding="utf-8")
    return p


def read_map(source: Union[str, Path, TextIO]) -> MapRecord:
    if hasattr(source, "read"):
        return loads_map(source.read())
    return loads_map(Path(source).read_text(encoding="utf-8"))
