import json
import math

import pandas as pd
import pytest

from app_quad.lab.dump import emit, write_rows
from app_quad.lab.runner import make_config, run, run_and_emit, run_replica
from app_quad.lab.sinks import DatabaseSink
from app_quad.lab.types import ExperimentRecord
from app_quad.models import ExperimentRun


def _config(name, tmp_path, **kw):
    kw.setdefault("seed", 5)
    kw.setdefault("replicas", 4)
    kw.setdefault("jobs", 1)
    return make_config(name, out=tmp_path, **kw)


# ---------- реплики ----------

def test_replica_error_becomes_row():
    row = run_replica("laplace", {"r": 0}, 1, 0, 64, 99)
    assert row["ok"] is False
    assert row["replica"] == 99
    assert row["error"] == "ConfigError"


def test_enumerate_counts(tmp_path):
    record = run(_config("enumerate", tmp_path, params={"n_max": "3"}))
    assert record.replicas == 3
    assert [r["maps"] for r in record.rows] == [2, 9, 54]
    assert [r["pointed"] for r in record.rows] == [6, 36, 270]
    assert all(row["pass"] for row in record.summary)
    assert record.errors == 0


def test_same_seed_same_rows(tmp_path):
    params = {"n_max": "8", "exhaustive_n": "1", "bounds_max": "8"}
    a = run(_config("bijection", tmp_path, params=params))
    b = run(_config("bijection", tmp_path, params=params))
    assert a.rows == b.rows
    assert [r["replica"] for r in a.rows] == [0, 1, 2, 3]
    assert all(r["roundtrip"] and r["identity"] for r in a.rows)


def test_pool_matches_serial(tmp_path):
    params = {"n_max": "6", "exhaustive_n": "0"}
    serial = run(_config("bijection", tmp_path, params=params))
    pooled = run(_config("bijection", tmp_path, params=params, jobs=2))
    assert pooled.rows == serial.rows


def test_laplace_summary_columns(tmp_path):
    params = {"r": "3", "lambdas": "1", "limit_r": "0"}
    record = run(_config("laplace", tmp_path, params=params, replicas=20))
    head = record.summary[0]
    assert head["statistic"] == "laplace(lambda=1.0)"
    assert head["lambda"] == 1.0
    assert head["limit"] == pytest.approx(1 / 8)
    assert 0 < head["exact_dp"] < 1
    assert 0 < head["empirical"] <= 1
    assert all(r["size"] >= 1 for r in record.rows)


# ---------- файлы прогона ----------

@pytest.fixture
def record():
    return ExperimentRecord(
        name="demo",
        params={"r": 3},
        seed=1,
        stream_base=2,
        code_version="test",
        replicas=2,
        rows=[{"replica": 0, "ok": True, "x": 1.5}, {"replica": 1, "ok": False, "error": "ResourceCap"}],
        summary=[{"statistic": "mean", "empirical": 1.5, "pass": True}],
        errors=1,
    )


def test_emit_csv(record, tmp_path):
    paths = emit(record, "csv", tmp_path)
    assert paths["rows"].parent == tmp_path / "demo" / "seed-1-base-2"
    rows = pd.read_csv(paths["rows"])
    assert list(rows.columns) == ["replica", "ok", "x", "error"]
    assert len(rows) == 2
    assert math.isnan(rows.loc[1, "x"])
    summary = pd.read_csv(paths["summary"])
    assert summary.loc[0, "statistic"] == "mean"
    manifest = json.loads(paths["manifest"].read_text())
    assert manifest["seed"] == 1
    assert manifest["stream_base"] == 2
    assert manifest["errors"] == 1
    assert manifest["files"] == {"rows": "rows.csv", "summary": "summary.csv"}


def test_emit_jsonl(record, tmp_path):
    paths = emit(record, "jsonl", tmp_path)
    lines = paths["rows"].read_text(encoding="utf-8").splitlines()
    assert [json.loads(line) for line in lines] == record.rows


def test_unknown_format(record, tmp_path):
    with pytest.raises(ValueError):
        write_rows(tmp_path / "rows.xml", record.rows, "xml")


def test_default_output_root(record, quad_out):
    paths = emit(record)
    assert paths["summary"] == quad_out / "demo" / "seed-1-base-2" / "summary.csv"


# ---------- база ----------

@pytest.mark.django_db
def test_database_sink(record, tmp_path):
    paths = emit(record, "jsonl", tmp_path)
    run_row = DatabaseSink().save(record, paths)
    stored = ExperimentRun.objects.get(pk=run_row.pk)
    assert stored.name == "demo"
    assert stored.params == {"r": 3}
    assert stored.errors == 1
    assert stored.rows_path.endswith("rows.jsonl")
    assert stored.passed


@pytest.mark.django_db
def test_run_and_emit_saves(tmp_path):
    record, paths = run_and_emit(_config("enumerate", tmp_path, params={"n_max": "2"}), save=True)
    assert paths["manifest"].exists()
    stored = ExperimentRun.objects.get(name="enumerate")
    assert stored.replicas == 2
    assert len(stored.summary) == 2
    assert stored.passed
