from __future__ import annotations

from django.core.management.base import CommandParser

from app_quad.lab.registry import get_experiment, list_experiments

from ._common import ExperimentCommand


class Command(ExperimentCommand):
    help = "Запускает любой зарегистрированный эксперимент по имени (--list — перечень)."
    experiments = tuple(list_experiments())

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--list", action="store_true", dest="list", help="Показать эксперименты и выйти.")

    def handle(self, *args, **opts):
        if opts.get("list"):
            for name in list_experiments():
                self.stdout.write(f"{name:<18} {get_experiment(name).help}")
            return
        super().handle(*args, **opts)
