from ._common import ExperimentCommand


class Command(ExperimentCommand):
    help = "Длина разделяющего цикла |∂F_{−r}|: эмпирическое преобразование Лапласа против точной прогонки."
    experiments = ("laplace",)
