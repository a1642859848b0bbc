from __future__ import annotations

from typing import Dict, Optional, Type

from app_quad.errors import ConfigError
from app_quad.lab.experiments import (
    Bijection,
    Confluence,
    CutPointsExperiment,
    DeltaPrimeTail,
    DeltaTail,
    Enumerate,
    Eq4,
    Experiment,
    Laplace,
    RDensity,
    Stabilization,
    Theta,
    TreeLaw,
    WalkLabels,
)

# Единый реестр "имя эксперимента" -> класс
_REGISTRY: Dict[str, Type[Experiment]] = {
    cls.name: cls
    for cls in (
        TreeLaw,
        Bijection,
        Enumerate,
        RDensity,
        DeltaTail,
        DeltaPrimeTail,
        CutPointsExperiment,
        Confluence,
        Eq4,
        Stabilization,
        Laplace,
        WalkLabels,
        Theta,
    )
}


def has_experiment(name: str) -> bool:
    return name in _REGISTRY


def find_experiment(name: str) -> Optional[Experiment]:
    cls = _REGISTRY.get(name)
    return cls() if cls else None


def get_experiment(name: str) -> Experiment:
    exp = find_experiment(name)
    if exp is None:
        raise ConfigError(f"unknown experiment '{name}', expected one of {list_experiments()}")
    return exp


def list_experiments() -> list[str]:
    return sorted(_REGISTRY.keys())
