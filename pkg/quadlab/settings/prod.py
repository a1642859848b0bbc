"""
Django settings — PROD.
Импортируем всё из dev и переопределяем критичное:
- DEBUG=False
- PostgreSQL для журнала прогонов
- лог в файл с ротацией + консоль
"""

from .dev import *  # импортируем dev-базу и переопределяем ниже
from pathlib import Path

# ───────────────────────────────────────────────────────────────────────────────
# Общие
# ───────────────────────────────────────────────────────────────────────────────
DEBUG = False
SECRET_KEY = "PUT-A-STRONG-SECRET-KEY-HERE"

assert DEBUG is False, "DEBUG must be False in production"

# ───────────────────────────────────────────────────────────────────────────────
# PostgreSQL
# ───────────────────────────────────────────────────────────────────────────────
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.postgresql",
        "NAME": "quadlab",
        "USER": "quadlab",
        "PASSWORD": "CHANGE_ME",
        "HOST": "127.0.0.1",
        "PORT": "5432",
        "CONN_MAX_AGE": 60,
    }
}

# ───────────────────────────────────────────────────────────────────────────────
# Логи: прогоны экспериментов в файл + консоль
# ───────────────────────────────────────────────────────────────────────────────
LOG_DIR = Path(BASE_DIR, "logs")
LOG_DIR.mkdir(exist_ok=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {"class": "logging.StreamHandler"},
        "runs_file": {
            "class": "logging.handlers.RotatingFileHandler",
            "filename": str(LOG_DIR / "experiments.log"),
            "maxBytes": 10_485_760,  # 10 MB
            "backupCount": 5,
            "encoding": "utf-8",
        },
    },
    "loggers": {
        "app_quad": {"handlers": ["runs_file", "console"], "level": "INFO", "propagate": False},
    },
}

# ───────────────────────────────────────────────────────────────────────────────
# Долгие прогоны
# ───────────────────────────────────────────────────────────────────────────────
QUAD_DEFAULT_JOBS = 8
QUAD_OUTPUT_ROOT = Path("/var/lib/quadlab/experiments")
