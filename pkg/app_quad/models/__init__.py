from .experiment import ExperimentRun

__all__ = ["ExperimentRun"]
