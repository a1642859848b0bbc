"""
Общая основа команд-экспериментов: флаги прогона, разбор конфига,
запуск раннера и печать сводки.
"""
from __future__ import annotations

from typing import Optional, Sequence

from django.core.management.base import BaseCommand, CommandError, CommandParser

from app_quad.errors import ConfigError
from app_quad.lab.runner import add_run_arguments, make_config, parse_params, run_and_emit


class ExperimentCommand(BaseCommand):
    # эксперименты, доступные команде; первый — по умолчанию
    experiments: Sequence[str] = ()

    def add_arguments(self, parser: CommandParser) -> None:
        if len(self.experiments) != 1:
            parser.add_argument(
                "--experiment",
                choices=list(self.experiments) or None,
                dest="experiment",
                help="Какой эксперимент запускать.",
            )
        add_run_arguments(parser, with_experiment=False)

    def experiment_name(self, opts) -> Optional[str]:
        if len(self.experiments) == 1:
            return self.experiments[0]
        return opts.get("experiment") or (self.experiments[0] if self.experiments else None)

    def handle(self, *args, **opts):
        try:
            rc = make_config(
                self.experiment_name(opts),
                config_file=opts.get("config_file"),
                seed=opts.get("seed"),
                replicas=opts.get("replicas"),
                jobs=opts.get("jobs"),
                stream_base=opts.get("stream_base"),
                out=opts.get("out"),
                fmt=opts.get("fmt"),
                params=parse_params(opts.get("params")),
            )
            record, paths = run_and_emit(rc, save=bool(opts.get("save")))
        except ConfigError as e:
            raise CommandError(str(e)) from e

        failed = 0
        for row in record.summary:
            verdict = row.get("pass")
            line = f"{row.get('statistic')}: empirical={row.get('empirical')} oracle={row.get('oracle')} z={row.get('z')}"
            if verdict is False:
                failed += 1
                self.stderr.write(self.style.WARNING(f"[FAIL] {line}"))
            elif verdict is True:
                self.stdout.write(f"[ OK ] {line}")
            else:
                self.stdout.write(f"[ -- ] {line}")
        if record.errors:
            self.stderr.write(self.style.WARNING(f"Реплик с ошибкой: {record.errors} из {record.replicas}"))
        msg = f"[DONE] {record.name} seed={record.seed} replicas={record.replicas} → {paths['summary'].parent}"
        if failed:
            self.stderr.write(self.style.WARNING(f"{msg} (проверок не прошло: {failed})"))
        else:
            self.stdout.write(self.style.SUCCESS(msg))
