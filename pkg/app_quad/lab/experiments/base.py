from __future__ import annotations

from typing import Any, ClassVar, Dict, List, Mapping

from app_quad.errors import ConfigError
from app_quad.lab.types import Row, SummaryRow
from app_quad.sampling.rng import RngStream


def _coerce(name: str, value: Any, default: Any) -> Any:
    """Приводит значение к типу значения по умолчанию; списки — поэлементно."""
    try:
        if isinstance(default, bool):
            if isinstance(value, str):
                low = value.strip().lower()
                if low not in ("1", "0", "true", "false", "yes", "no"):
                    raise ValueError(value)
                return low in ("1", "true", "yes")
            return bool(value)
        if isinstance(default, (list, tuple)):
            items = value.split(",") if isinstance(value, str) else list(value)
            kind = type(default[0]) if default else str
            return [kind(x.strip()) if isinstance(x, str) else kind(x) for x in items if str(x).strip() != ""]
        if isinstance(default, int):
            if isinstance(value, float) and not value.is_integer():
                raise ValueError(value)
            return int(value)
        if isinstance(default, float):
            return float(value)
        return str(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"parameter '{name}': cannot use {value!r}") from e


def require(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


class Experiment:
    """
    Эксперимент: проверенные параметры, функция одной реплики и сводка.

    Реплика получает собственный поток RngStream(seed, stream_base + id) и
    возвращает плоский словарь (только скаляры и строки). Ключи ok, error,
    detail и replica заняты раннером.
    """

    name: ClassVar[str] = ""
    help: ClassVar[str] = ""
    defaults: ClassVar[Dict[str, Any]] = {}
    # реплики — элементы перебора, а не независимые выборки
    exhaustive: ClassVar[bool] = False

    def validate(self, params: Mapping[str, Any]) -> Dict[str, Any]:
        unknown = sorted(set(params) - set(self.defaults))
        if unknown:
            raise ConfigError(f"{self.name}: unknown parameters {unknown}")
        out = {k: (list(v) if isinstance(v, (list, tuple)) else v) for k, v in self.defaults.items()}
        for k, v in params.items():
            out[k] = _coerce(k, v, self.defaults[k])
        self.check(out)
        return out

    def check(self, p: Dict[str, Any]) -> None:
        pass

    def replica_count(self, p: Dict[str, Any], replicas: int) -> int:
        return replicas

    def replica(self, p: Dict[str, Any], rng: RngStream, replica: int) -> Row:
        raise NotImplementedError

    def summarize(self, p: Dict[str, Any], rows: List[Row]) -> List[SummaryRow]:
        raise NotImplementedError
