from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import yaml

from app_quad.errors import ConfigError, QuadError
from app_quad.lab.types import OUTPUT_FORMATS, ExperimentRecord, Row, RunConfig

# ──────────────────────────────────────────────────────────────────────────────
# ЛОГИРОВАНИЕ / DJANGO
# ──────────────────────────────────────────────────────────────────────────────

def _configure_logging(verbose: int):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")

log = logging.getLogger(__name__)

def _ensure_django(settings_module: Optional[str]):
    """
    Модуль настроек не угадываем: --settings или DJANGO_SETTINGS_MODULE.
    """
    if settings_module:
        os.environ["DJANGO_SETTINGS_MODULE"] = settings_module
    if "DJANGO_SETTINGS_MODULE" not in os.environ:
        raise SystemExit(
            "DJANGO_SETTINGS_MODULE is not set. "
            "Pass --settings quadlab.settings or export DJANGO_SETTINGS_MODULE in the environment."
        )

    import django
    from django.apps import apps

    if not apps.ready:
        django.setup()

    from django.conf import settings as dj_settings
    log.info("Using settings: %s (DEBUG=%s)", os.environ["DJANGO_SETTINGS_MODULE"], dj_settings.DEBUG)


def _init_worker(settings_module: Optional[str]):
    # дочерний процесс пула: настройки нужны для лимитов и допусков
    _ensure_django(settings_module)


# ──────────────────────────────────────────────────────────────────────────────
# КОНФИГ
# ──────────────────────────────────────────────────────────────────────────────

def load_yaml(path: Path) -> Dict[str, Any]:
    """
    Файл эксперимента:
      experiment: laplace
      seed: 7
      replicas: 10000
      params: {r: 40, lambdas: [0.5, 1, 2]}
    """
    try:
        data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot read config '{path}': {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"config '{path}' must be a mapping")
    if "params" in data and not isinstance(data["params"], dict):
        raise ConfigError("'params' must be a mapping")
    return data


def parse_params(pairs: Optional[List[str]]) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for item in pairs or []:
        if "=" not in item:
            raise ConfigError(f"parameter '{item}' must look like key=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def make_config(
    experiment: Optional[str] = None,
    *,
    config_file: Optional[Path] = None,
    seed: Optional[int] = None,
    replicas: Optional[int] = None,
    jobs: Optional[int] = None,
    stream_base: Optional[int] = None,
    out: Optional[Path] = None,
    fmt: Optional[str] = None,
    params: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Файл YAML, поверх него флаги командной строки, затем значения из настроек."""
    from app_quad.lab import config as cfg

    data = load_yaml(config_file) if config_file else {}
    merged_params = dict(data.get("params") or {})
    merged_params.update(params or {})

    def pick(flag, key, default):
        if flag is not None:
            return flag
        return data.get(key, default)

    name = pick(experiment, "experiment", None)
    if not name:
        raise ConfigError("experiment name is required")
    fmt = pick(fmt, "format", "jsonl")
    if fmt not in OUTPUT_FORMATS:
        raise ConfigError(f"format must be one of {OUTPUT_FORMATS}")
    out_dir = pick(out, "out", None)
    rc = RunConfig(
        experiment=str(name),
        params=merged_params,
        seed=int(pick(seed, "seed", cfg.default_seed())),
        replicas=int(pick(replicas, "replicas", cfg.default_replicas())),
        jobs=int(pick(jobs, "jobs", cfg.default_jobs())),
        stream_base=int(pick(stream_base, "stream_base", 0)),
        out=Path(out_dir) if out_dir else None,
        fmt=fmt,
    )
    if rc.replicas < 1:
        raise ConfigError("replicas must be ≥ 1")
    if rc.jobs < 1:
        raise ConfigError("jobs must be ≥ 1")
    if rc.stream_base < 0:
        raise ConfigError("stream_base must be ≥ 0")
    return rc


# ──────────────────────────────────────────────────────────────────────────────
# РЕПЛИКИ
# ──────────────────────────────────────────────────────────────────────────────

def run_replica(name: str, params: Dict[str, Any], seed: int, stream_base: int, block: int, replica: int) -> Row:
    """
    Одна реплика в собственном потоке RngStream(seed, stream_base + replica).
    Ошибки не пробрасываются: строка помечается ok=False.
    """
    from app_quad.lab.registry import get_experiment
    from app_quad.sampling.rng import RngStream

    exp = get_experiment(name)
    rng = RngStream(seed, stream_base + replica, block=block)
    try:
        row = exp.replica(params, rng, replica)
    except QuadError as e:
        log.warning("replica %s of %s: %s: %s", replica, name, type(e).__name__, e)
        return {"replica": replica, "ok": False, "error": type(e).__name__, "detail": str(e)}
    except Exception as e:
        log.exception("replica %s of %s failed", replica, name)
        return {"replica": replica, "ok": False, "error": type(e).__name__, "detail": str(e)}
    return {"replica": replica, "ok": True, **row}


# ──────────────────────────────────────────────────────────────────────────────
# ОСНОВНОЙ ЗАПУСК
# ──────────────────────────────────────────────────────────────────────────────

def code_version() -> str:
    from app_quad import __version__
    return __version__


def summarize(record: ExperimentRecord) -> List[Dict[str, Any]]:
    """Сводка по успешным строкам; при вырожденной выборке — одна строка с причиной."""
    from app_quad.lab.registry import get_experiment
    from app_quad.lab.stats import StatsError

    exp = get_experiment(record.name)
    try:
        return exp.summarize(record.params, record.ok_rows)
    except StatsError as e:
        log.warning("summary of %s is degenerate: %s", record.name, e)
        return [{"statistic": "summary", "empirical": None, "stderr": None, "oracle": None,
                 "z": None, "pass": False, "detail": str(e)}]


def run(rc: RunConfig) -> ExperimentRecord:
    """
    Валидирует параметры, выполняет реплики (последовательно или пулом
    процессов) и собирает запись. Порядок строк — по номеру реплики.
    """
    from django.utils import timezone as dj_tz

    from app_quad.lab.config import rng_block
    from app_quad.lab.metrics import Counter, Timer
    from app_quad.lab.registry import get_experiment

    exp = get_experiment(rc.experiment)
    params = exp.validate(rc.params)
    n = exp.replica_count(params, rc.replicas)
    block = rng_block()
    counter = Counter(replicas=n)
    ids = range(n)

    with Timer(counter, "replicas"):
        if rc.jobs > 1 and n > 1:
            settings_module = os.environ.get("DJANGO_SETTINGS_MODULE")
            with ProcessPoolExecutor(max_workers=rc.jobs, initializer=_init_worker, initargs=(settings_module,)) as pool:
                rows = list(pool.map(
                    run_replica,
                    [rc.experiment] * n, [params] * n, [rc.seed] * n, [rc.stream_base] * n, [block] * n, ids,
                ))
        else:
            rows = [run_replica(rc.experiment, params, rc.seed, rc.stream_base, block, i) for i in ids]
    rows.sort(key=lambda r: r["replica"])

    for r in rows:
        if r["ok"]:
            counter.ok += 1
            counter.deepenings += int(r.get("deepenings") or 0)
        else:
            counter.count_error(r["error"])

    record = ExperimentRecord(
        name=exp.name,
        params=params,
        seed=rc.seed,
        stream_base=rc.stream_base,
        code_version=code_version(),
        replicas=n,
        rows=rows,
        errors=counter.errors,
        created_at=dj_tz.now(),
    )
    with Timer(counter, "summary"):
        record.summary = summarize(record)
    counter.rows_written = len(rows)
    counter.log_json(exp.name, rc.seed, jobs=rc.jobs, stream_base=rc.stream_base)
    return record


def run_and_emit(rc: RunConfig, save: bool = False):
    """run + файлы прогона (+ запись в БД при save). Возвращает (запись, пути)."""
    from app_quad.lab.dump import emit

    record = run(rc)
    paths = emit(record, rc.fmt, rc.out)
    if save:
        from app_quad.lab.sinks import DatabaseSink
        DatabaseSink().save(record, paths)
    return record, paths


# ──────────────────────────────────────────────────────────────────────────────
# CLI
# ──────────────────────────────────────────────────────────────────────────────

def add_run_arguments(parser: argparse.ArgumentParser, with_experiment: bool = True) -> None:
    """Общие флаги прогона; используются и раннером, и management-командами."""
    if with_experiment:
        parser.add_argument("--experiment", help="Experiment name (see --list)")
    parser.add_argument("--config", dest="config_file", type=Path, help="YAML file with experiment settings")
    parser.add_argument("--seed", type=int, help="Root seed (default: QUAD_DEFAULT_SEED)")
    parser.add_argument("--replicas", type=int, help="Number of replicas (default: QUAD_DEFAULT_REPLICAS)")
    parser.add_argument("--jobs", type=int, help="Worker processes (default: QUAD_DEFAULT_JOBS)")
    parser.add_argument("--stream-base", dest="stream_base", type=int, help="First RNG stream id")
    parser.add_argument("--out", type=Path, help="Output directory (default: QUAD_OUTPUT_ROOT)")
    parser.add_argument("--format", dest="fmt", choices=OUTPUT_FORMATS, help="Per-replica rows format")
    parser.add_argument("--param", action="append", dest="params", help="Experiment parameter key=value (repeatable)")
    parser.add_argument("--save", action="store_true", help="Store the run in the database")


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Quadrangulation experiments runner")
    parser.add_argument("--settings", help="Django settings module, e.g. quadlab.settings")
    parser.add_argument("--list", action="store_true", help="List experiments and exit")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    add_run_arguments(parser)

    args = parser.parse_args(argv if argv is not None else sys.argv[1:])
    _configure_logging(args.verbose)
    _ensure_django(args.settings)

    from app_quad.lab.registry import get_experiment, list_experiments

    if args.list:
        for name in list_experiments():
            print(f"{name:<18} {get_experiment(name).help}")
        return 0

    try:
        rc = make_config(
            args.experiment,
            config_file=args.config_file,
            seed=args.seed,
            replicas=args.replicas,
            jobs=args.jobs,
            stream_base=args.stream_base,
            out=args.out,
            fmt=args.fmt,
            params=parse_params(args.params),
        )
        record, paths = run_and_emit(rc, save=args.save)
    except ConfigError as e:
        parser.error(str(e))
        return 2
    print(paths["summary"])
    failed = [row for row in record.summary if row.get("pass") is False]
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
