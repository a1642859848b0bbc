from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

OUTPUT_FORMATS = ("jsonl", "csv")


@dataclass(frozen=True)
class RunConfig:
    experiment: str
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    replicas: int = 1
    jobs: int = 1
    stream_base: int = 0
    out: Optional[Path] = None
    fmt: str = "jsonl"  # jsonl|csv для строк реплик


@dataclass
class ExperimentRecord:
    name: str
    params: Dict[str, Any]
    seed: int
    stream_base: int
    code_version: str
    replicas: int
    rows: List[Dict[str, Any]] = field(default_factory=list)
    summary: List[Dict[str, Any]] = field(default_factory=list)
    errors: int = 0
    created_at: Optional[datetime] = None
    notes: Optional[str] = None

    @property
    def ok_rows(self) -> List[Dict[str, Any]]:
        return [r for r in self.rows if r.get("ok", True) and not r.get("error")]

    def manifest(self) -> Dict[str, Any]:
        return {
            "experiment": self.name,
            "params": self.params,
            "seed": self.seed,
            "stream_base": self.stream_base,
            "code_version": self.code_version,
            "replicas": self.replicas,
            "errors": self.errors,
            "created_at": self.created_at,
        }


# Удобные типы
Row = Dict[str, Any]
SummaryRow = Dict[str, Any]
