from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Dict

log = logging.getLogger(__name__)


@dataclass
class Counter:
    replicas: int = 0
    ok: int = 0
    errors: int = 0
    resource_caps: int = 0
    deepenings: int = 0
    rows_written: int = 0
    timings_ms: Dict[str, int] = field(default_factory=dict)
    error_kinds: Dict[str, int] = field(default_factory=dict)

    def count_error(self, kind: str) -> None:
        self.errors += 1
        self.error_kinds[kind] = self.error_kinds.get(kind, 0) + 1
        if kind == "ResourceCap":
            self.resource_caps += 1

    def log_json(self, experiment: str, seed: int, **extra):
        payload = {
            "experiment": experiment,
            "seed": seed,
            "replicas": self.replicas,
            "ok": self.ok,
            "errors": self.errors,
            "error_kinds": self.error_kinds,
            "resource_caps": self.resource_caps,
            "deepenings": self.deepenings,
            "rows_written": self.rows_written,
            "timings_ms": self.timings_ms,
            **extra,
        }
        log.info(json.dumps(payload, ensure_ascii=False, default=str))


class Timer:
    def __init__(self, counter: Counter, key: str):
        self.counter = counter
        self.key = key
        self._t0 = 0.0

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = int((time.perf_counter() - self._t0) * 1000)
        # фазы с одинаковым ключом суммируются
        self.counter.timings_ms[self.key] = self.counter.timings_ms.get(self.key, 0) + dt
