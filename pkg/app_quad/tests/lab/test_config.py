from pathlib import Path

import pytest

from app_quad.errors import ConfigError
from app_quad.lab.registry import get_experiment, has_experiment, list_experiments
from app_quad.lab.runner import load_yaml, make_config, parse_params


# ---------- разбор параметров ----------

def test_parse_params():
    assert parse_params(["r=5", "lambdas = 0.5,1"]) == {"r": "5", "lambdas": "0.5,1"}
    assert parse_params(None) == {}
    with pytest.raises(ConfigError):
        parse_params(["r"])


# ---------- YAML и приоритеты ----------

@pytest.fixture
def yaml_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text(
        "experiment: laplace\nseed: 7\nreplicas: 50\nformat: csv\nparams:\n  r: 40\n  lambdas: [0.5, 1]\n",
        encoding="utf-8",
    )
    return path


def test_yaml_is_read(yaml_file):
    rc = make_config(config_file=yaml_file)
    assert rc.experiment == "laplace"
    assert rc.seed == 7
    assert rc.replicas == 50
    assert rc.fmt == "csv"
    assert rc.params == {"r": 40, "lambdas": [0.5, 1]}


def test_flags_override_yaml(yaml_file, tmp_path):
    rc = make_config(config_file=yaml_file, seed=9, fmt="jsonl", out=tmp_path, params={"r": "5"})
    assert rc.seed == 9
    assert rc.fmt == "jsonl"
    assert rc.out == tmp_path
    assert rc.params == {"r": "5", "lambdas": [0.5, 1]}


def test_settings_defaults(settings):
    settings.QUAD_DEFAULT_SEED = 11
    settings.QUAD_DEFAULT_REPLICAS = 3
    rc = make_config("enumerate")
    assert (rc.seed, rc.replicas, rc.stream_base, rc.out) == (11, 3, 0, None)


@pytest.mark.parametrize("kwargs", [
    {},
    {"experiment": "enumerate", "fmt": "xml"},
    {"experiment": "enumerate", "replicas": 0},
    {"experiment": "enumerate", "jobs": 0},
    {"experiment": "enumerate", "stream_base": -1},
])
def test_bad_config(kwargs):
    with pytest.raises(ConfigError):
        make_config(**kwargs)


@pytest.mark.parametrize("text", ["- a\n- b\n", "experiment: x\nparams: [1, 2]\n", "a: [1\n"])
def test_bad_yaml(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_yaml(path)


def test_empty_yaml(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    assert load_yaml(path) == {}


# ---------- реестр и проверка параметров ----------

def test_registry():
    names = list_experiments()
    assert len(names) == 13
    assert names == sorted(names)
    assert {"enumerate", "laplace", "theta", "walk-labels", "r-density"} <= set(names)
    assert has_experiment("laplace")
    with pytest.raises(ConfigError):
        get_experiment("nope")


def test_validate_coerces():
    p = get_experiment("laplace").validate({"r": "12", "lambdas": "0.5, 2"})
    assert p["r"] == 12
    assert p["lambdas"] == [0.5, 2.0]
    assert p["limit_r"] == 200


@pytest.mark.parametrize("params", [
    {"bogus": 1},
    {"r": "2.5"},
    {"r": 0},
    {"lambdas": "0,1"},
    {"lambdas": "abc"},
])
def test_validate_rejects(params):
    with pytest.raises(ConfigError):
        get_experiment("laplace").validate(params)


def test_validate_does_not_touch_defaults():
    exp = get_experiment("laplace")
    p = exp.validate({})
    p["lambdas"].append(9.0)
    assert exp.validate({})["lambdas"] == [0.5, 1.0, 2.0]


# ---------- файлы из configs/ ----------

@pytest.mark.parametrize("name", ["laplace", "delta_tail", "r_density", "walk_labels"])
def test_shipped_configs_validate(settings, name):
    rc = make_config(config_file=Path(settings.BASE_DIR) / "configs" / f"{name}.yaml")
    params = get_experiment(rc.experiment).validate(rc.params)
    assert rc.seed == 20240601
    assert params
