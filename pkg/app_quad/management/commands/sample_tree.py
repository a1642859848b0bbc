from __future__ import annotations

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError, CommandParser

from app_quad.errors import QuadError
from app_quad.lab.config import default_seed
from app_quad.sampling.rng import RngStream
from app_quad.sampling.samplers import sample_gw, sample_uniform_tree
from app_quad.trees.treefile import dumps_tree, write_tree


class Command(BaseCommand):
    help = (
        "Выбирает меченое дерево (критическое ГВ-дерево ρ_l или равномерное из 𝕋⁽⁰⁾ₙ) "
        "и пишет его в скобочном формате."
    )

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--kind", choices=["gw", "uniform"], default="uniform", dest="kind",
                            help="gw — ρ_l с корневой меткой --label, uniform — равномерное дерево с n рёбрами.")
        parser.add_argument("--n", type=int, default=10, dest="n", help="Число рёбер для uniform.")
        parser.add_argument("--label", type=int, default=0, dest="label", help="Корневая метка для gw.")
        parser.add_argument("--seed", type=int, dest="seed", help="Seed (по умолчанию QUAD_DEFAULT_SEED).")
        parser.add_argument("--stream", type=int, default=0, dest="stream", help="Номер потока ГПСЧ.")
        parser.add_argument("--out", type=Path, dest="out", help="Файл дерева; без него — в stdout.")

    def handle(self, *args, **opts):
        seed = opts["seed"] if opts.get("seed") is not None else default_seed()
        rng = RngStream(seed, opts["stream"])
        try:
            if opts["kind"] == "gw":
                tree = sample_gw(opts["label"], rng)
            else:
                tree = sample_uniform_tree(opts["n"], rng)
        except (QuadError, ValueError) as e:
            raise CommandError(str(e)) from e

        if opts.get("out"):
            path = write_tree(opts["out"], tree)
            self.stdout.write(self.style.SUCCESS(f"[OK] {tree.size} рёбер, min метка {tree.min_label} → {path}"))
        else:
            self.stdout.write(dumps_tree(tree))
