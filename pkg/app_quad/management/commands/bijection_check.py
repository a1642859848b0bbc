from ._common import ExperimentCommand


class Command(ExperimentCommand):
    help = "Φ⁻¹∘Φ = id и оценки расстояний на случайных деревьях, плюс полный перебор малых n."
    experiments = ("bijection",)
