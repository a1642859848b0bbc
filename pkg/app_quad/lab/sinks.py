from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, Optional

from django.db import transaction

from app_quad.lab.types import ExperimentRecord

log = logging.getLogger(__name__)


def _jsonable(value):
    # numpy-скаляры и Path в JSONField не попадут
    return json.loads(json.dumps(value, ensure_ascii=False, default=str))


class DatabaseSink:
    """Сохраняет метаданные прогона в ExperimentRun."""

    @transaction.atomic
    def save(self, record: ExperimentRecord, files: Optional[Dict[str, Path]] = None):
        from app_quad.models import ExperimentRun

        rows_path = str(files["rows"]) if files and "rows" in files else ""
        run = ExperimentRun(
            name=record.name,
            params=_jsonable(record.params),
            seed=record.seed,
            stream_base=record.stream_base,
            code_version=record.code_version,
            replicas=record.replicas,
            errors=record.errors,
            summary=_jsonable(record.summary),
            rows_path=rows_path,
        )
        if record.created_at is not None:
            run.created_at = record.created_at
        run.save()
        log.info("saved run %s of %s (seed=%s)", run.pk, record.name, record.seed)
        return run
