from ._common import ExperimentCommand


class Command(ExperimentCommand):
    help = "Перебор 𝒬ₙ через биекцию для n = 1..n_max и сверка с 2·3ⁿ·Cat(n)/(n+2)."
    experiments = ("enumerate",)
