from pathlib import Path
import os

# ───────────────────────────────────────────────────────────────────────────────
# БАЗОВОЕ
# ───────────────────────────────────────────────────────────────────────────────
BASE_DIR = Path(__file__).resolve().parent.parent.parent  # корень проекта
DEBUG = True  # прод переопределит на False
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "CHANGE_ME_IN_PROD")
ALLOWED_HOSTS: list[str] = []
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# ───────────────────────────────────────────────────────────────────────────────
# Локализация и время
# ───────────────────────────────────────────────────────────────────────────────
LANGUAGE_CODE = "ru"
TIME_ZONE = "Europe/Moscow"
USE_I18N = True
USE_TZ = True

# ───────────────────────────────────────────────────────────────────────────────
# Приложения
# ───────────────────────────────────────────────────────────────────────────────
INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",

    # Наши приложения
    "app_quad.apps.AppQuadConfig",
]

# ───────────────────────────────────────────────────────────────────────────────
# База данных (dev: SQLite)
# ───────────────────────────────────────────────────────────────────────────────
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}

# ───────────────────────────────────────────────────────────────────────────────
# LOGGING (DEV)
# ───────────────────────────────────────────────────────────────────────────────
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {"class": "logging.StreamHandler"},
    },
    "loggers": {
        # поднимай до DEBUG при отладке сэмплеров и окон
        "app_quad": {"handlers": ["console"], "level": "INFO", "propagate": False},
    },
}

# ───────────────────────────────────────────────────────────────────────────────
# QUAD: лимиты, зерна, допуски
# ───────────────────────────────────────────────────────────────────────────────

# Предел числа вершин одной выборки дерева
QUAD_NODE_CAP = 10_000_000

# Зерно и число реплик по умолчанию для экспериментов
QUAD_DEFAULT_SEED = 20240601
QUAD_DEFAULT_REPLICAS = 100
QUAD_DEFAULT_JOBS = 1

# Куда пишутся строки реплик, сводки и манифесты
QUAD_OUTPUT_ROOT = BASE_DIR / "var" / "experiments"

# Допуск в сигмах и доля успешных выборок для приёмочных сводок
QUAD_SIGMA_TOLERANCE = 3.0
QUAD_PASS_RATE = 0.95

# Окно до σ_M сертифицирует шар радиуса M − QUAD_TRUNCATION_MARGIN
QUAD_TRUNCATION_MARGIN = 3
QUAD_MAX_DEEPENINGS = 4

# Точная прогонка преобразования Лапласа
QUAD_LAPLACE_TOL = 1e-10
QUAD_LAPLACE_MAX_TOP = 4_194_304

QUAD_GEODESIC_ENUM_CAP = 200_000

# Запас по уровню спины при поиске точек разреза: окно до σ_{margin·horizon}
QUAD_SPINE_HIT_MARGIN = 2.0

# Размер блока буферизованных выборок RngStream
QUAD_RNG_BLOCK = 4096
