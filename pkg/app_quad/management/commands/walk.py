from ._common import ExperimentCommand


class Command(ExperimentCommand):
    help = "Процесс меток вдоль простого случайного блуждания на окне UIPQ."
    experiments = ("walk-labels",)
