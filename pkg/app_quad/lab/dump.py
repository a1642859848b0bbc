# app_quad/lab/dump.py
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from app_quad.lab.config import output_root
from app_quad.lab.types import OUTPUT_FORMATS, ExperimentRecord


def _ensure_dir(p: Path) -> None:
    p.mkdir(parents=True, exist_ok=True)


def run_dir(record: ExperimentRecord, out: Optional[Path] = None) -> Path:
    """
    Каталог прогона: <out|QUAD_OUTPUT_ROOT>/<эксперимент>/seed-<seed>-base-<stream_base>.
    Один и тот же seed перезаписывает свои файлы.
    """
    base = Path(out) if out is not None else output_root()
    return base / record.name / f"seed-{record.seed}-base-{record.stream_base}"


def _columns(rows: Iterable[Dict[str, Any]]) -> List[str]:
    cols: List[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def write_rows(path: Path, rows: List[Dict[str, Any]], fmt: str) -> Path:
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"unknown format '{fmt}', expected one of {OUTPUT_FORMATS}")
    _ensure_dir(path.parent)
    if fmt == "jsonl":
        with path.open("w", encoding="utf-8") as fh:
            for r in rows:
                fh.write(json.dumps(r, ensure_ascii=False, default=str))
                fh.write("\n")
    else:
        write_table(path, rows)
    return path


def write_table(path: Path, rows: List[Dict[str, Any]]) -> Path:
    _ensure_dir(path.parent)
    frame = pd.DataFrame(rows, columns=_columns(rows))
    frame.to_csv(path, index=False)
    return path


def write_manifest(path: Path, record: ExperimentRecord, files: Dict[str, str]) -> Path:
    _ensure_dir(path.parent)
    payload = {**record.manifest(), "files": files}
    path.write_text(json.dumps(payload, ensure_ascii=False, indent=2, default=str))
    return path


def emit(record: ExperimentRecord, fmt: str = "jsonl", out: Optional[Path] = None) -> Dict[str, Path]:
    """
    Строки реплик (jsonl|csv), сводка CSV и манифест JSON со всеми параметрами.
    Возвращает пути записанных файлов.
    """
    target = run_dir(record, out)
    rows_path = write_rows(target / f"rows.{fmt}", record.rows, fmt)
    summary_path = write_table(target / "summary.csv", record.summary)
    files = {"rows": rows_path.name, "summary": summary_path.name}
    manifest_path = write_manifest(target / "manifest.json", record, files)
    return {"rows": rows_path, "summary": summary_path, "manifest": manifest_path}
