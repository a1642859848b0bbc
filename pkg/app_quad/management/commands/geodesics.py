from ._common import ExperimentCommand


class Command(ExperimentCommand):
    help = (
        "Эксперименты о геодезических: плотность множества встреч R, хвосты Δ и Δ′, "
        "точки разреза, слияние, тождество метки через метрику, стабилизация шаров."
    )
    experiments = ("r-density", "delta-tail", "delta-prime-tail", "cut-points", "confluence", "eq4", "stabilization")
