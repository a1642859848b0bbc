from __future__ import annotations

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError, CommandParser

from app_quad.errors import QuadError
from app_quad.lab.config import default_seed
from app_quad.maps.mapfile import dumps_map, write_map
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import sample_eta, sample_kesten_truncated
from app_quad.schaeffer.construct import phi_finite, window_map
from app_quad.trees.spine import SpineHitsLevel
from app_quad.trees.treefile import read_tree


class Command(BaseCommand):
    help = (
        "Строит квадрангуляцию: Φ(дерево, η) из файла дерева, либо окно UIPQ "
        "до первого попадания спины на уровень −M (с дырами и сертифицированным радиусом)."
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--tree", type=Path, dest="tree", help="Файл дерева из 𝕋⁽⁰⁾ₙ.")
        parser.add_argument("--eta", type=int, choices=[0, 1], default=0, dest="eta", help="Ориентация корня.")
        parser.add_argument("--window", action="store_true", dest="window",
                            help="Вместо конечного дерева выбрать дерево Кестена и построить окно.")
        parser.add_argument("--level", type=int, default=20, dest="level", help="Уровень M для окна.")
        parser.add_argument("--seed", type=int, dest="seed", help="Seed для окна (по умолчанию QUAD_DEFAULT_SEED).")
        parser.add_argument("--stream", type=int, default=0, dest="stream", help="Номер потока ГПСЧ.")
        parser.add_argument("--out", type=Path, dest="out", help="Файл карты; без него — в stdout.")

    def handle(self, *args, **opts):
        try:
            if opts.get("window"):
                seed = opts["seed"] if opts.get("seed") is not None else default_seed()
                rng = RngStream(seed, opts["stream"])
                st = sample_kesten_truncated(SpineHitsLevel(opts["level"]), rng)
                wq = window_map(st, sample_eta(rng))
                quad, pointed = wq.quad, None
            else:
                if not opts.get("tree"):
                    raise CommandError("нужен --tree или --window")
                pq = phi_finite(read_tree(opts["tree"]), opts["eta"])
                quad, pointed = pq.quad, pq.pointed
        except QuadError as e:
            raise CommandError(str(e)) from e

        if opts.get("out"):
            path = write_map(opts["out"], quad, pointed=pointed)
            self.stdout.write(self.style.SUCCESS(f"[OK] карта записана → {path}"))
        else:
            self.stdout.write(dumps_map(quad, pointed=pointed), ending="")
