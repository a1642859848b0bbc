from django.db import models
from django.db.models import Index
from django.utils import timezone
from django.utils.translation import gettext_lazy as _t


class ExperimentRun(models.Model):
    """
    Метаданные одного прогона эксперимента. Сами строки реплик лежат в
    файлах каталога прогона; здесь только путь к ним и сводка.
    """
    name = models.CharField(_t("Эксперимент"), max_length=64, db_index=True)
    params = models.JSONField(_t("Параметры"), default=dict, blank=True)
    seed = models.BigIntegerField(_t("Seed"))
    stream_base = models.BigIntegerField(_t("Первый поток"), default=0)
    code_version = models.CharField(_t("Версия кода"), max_length=32)
    replicas = models.PositiveIntegerField(_t("Реплик"))
    errors = models.PositiveIntegerField(_t("Ошибок"), default=0)
    summary = models.JSONField(_t("Сводка"), default=list, blank=True)
    rows_path = models.CharField(_t("Файл строк"), max_length=512, blank=True, default="")
    created_at = models.DateTimeField(_t("Создан"), default=timezone.now, db_index=True)

    class Meta:
        db_table = "quad_experiment_run"
        verbose_name = _t("Прогон эксперимента")
        verbose_name_plural = _t("Прогоны экспериментов")
        ordering = ["-created_at"]
        indexes = [
            Index(fields=["name", "seed", "stream_base"], name="idx_run_name_seed"),
        ]

    def __str__(self) -> str:
        return f"{self.name} seed={self.seed} base={self.stream_base} ({self.replicas} реплик, ошибок {self.errors})"

    @property
    def passed(self) -> bool:
        """Все строки сводки с явным вердиктом прошли."""
        return all(row.get("pass") is not False for row in self.summary or [])
