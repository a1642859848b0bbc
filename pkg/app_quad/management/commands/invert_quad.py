from __future__ import annotations

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError, CommandParser

from app_quad.errors import QuadError
from app_quad.maps.mapfile import read_map
from app_quad.schaeffer.inverse import phi_inverse_finite
from app_quad.trees.treefile import dumps_tree, write_tree


class Command(BaseCommand):
    help = "Обращает биекцию: по файлу отмеченной квадрангуляции (POINTED) восстанавливает дерево и η."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--map", type=Path, required=True, dest="map", help="Файл карты с записью POINTED.")
        parser.add_argument("--out", type=Path, dest="out", help="Файл дерева; без него — в stdout.")

    def handle(self, *args, **opts):
        try:
            record = read_map(opts["map"])
            if record.pointed is None:
                raise CommandError("в файле карты нет отмеченной вершины (POINTED)")
            if record.quad.hole_faces:
                raise CommandError("карта с дырами не обращается")
            tree, eta = phi_inverse_finite((record.quad.map, record.pointed))
        except QuadError as e:
            raise CommandError(str(e)) from e

        if opts.get("out"):
            path = write_tree(opts["out"], tree)
            self.stdout.write(self.style.SUCCESS(f"[OK] η={eta}, {tree.size} рёбер → {path}"))
        else:
            self.stdout.write(dumps_tree(tree))
            self.stdout.write(f"eta={eta}")
