# app_quad/lab/config.py
from __future__ import annotations

from pathlib import Path

from django.conf import settings


def node_cap() -> int:
    return int(getattr(settings, "QUAD_NODE_CAP", 10_000_000))


def default_seed() -> int:
    return int(getattr(settings, "QUAD_DEFAULT_SEED", 20240601))


def default_replicas() -> int:
    return int(getattr(settings, "QUAD_DEFAULT_REPLICAS", 100))


def default_jobs() -> int:
    return int(getattr(settings, "QUAD_DEFAULT_JOBS", 1))


def output_root() -> Path:
    try:
        return Path(settings.QUAD_OUTPUT_ROOT)
    except AttributeError:
        return Path(settings.BASE_DIR) / "var" / "experiments"


def sigma_tolerance() -> float:
    return float(getattr(settings, "QUAD_SIGMA_TOLERANCE", 3.0))


def pass_rate() -> float:
    return float(getattr(settings, "QUAD_PASS_RATE", 0.95))


def truncation_margin() -> int:
    return int(getattr(settings, "QUAD_TRUNCATION_MARGIN", 3))


def max_deepenings() -> int:
    return int(getattr(settings, "QUAD_MAX_DEEPENINGS", 4))


def laplace_tol() -> float:
    return float(getattr(settings, "QUAD_LAPLACE_TOL", 1e-10))


def laplace_max_top() -> int:
    return int(getattr(settings, "QUAD_LAPLACE_MAX_TOP", 4_194_304))


def geodesic_enum_cap() -> int:
    return int(getattr(settings, "QUAD_GEODESIC_ENUM_CAP", 200_000))


def spine_hit_margin() -> float:
    return float(getattr(settings, "QUAD_SPINE_HIT_MARGIN", 2.0))


def rng_block() -> int:
    return int(getattr(settings, "QUAD_RNG_BLOCK", 4096))
