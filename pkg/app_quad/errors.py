"""
Единая иерархия ошибок лаборатории.

Все исключения библиотеки наследуют QuadError, поэтому раннер экспериментов
может ловить их одной веткой и считать по реплике, не роняя весь прогон.
"""
from __future__ import annotations

from typing import Any, Optional


class QuadError(Exception):
    """Базовая ошибка пакета app_quad."""


# ---- Карты ----

class NotInvolution(QuadError):
    pass


class NotConnected(QuadError):
    pass


class EulerViolation(QuadError):
    pass


class NotQuadrangulation(QuadError):
    pass


class InsufficientCertification(QuadError):
    def __init__(self, requested: int, certified: Optional[int], detail: str = ""):
        self.requested = requested
        self.certified = certified
        msg = f"radius {requested} exceeds certified radius {certified}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class MalformedMapFile(QuadError, ValueError):
    pass


# ---- Деревья ----

class MalformedContour(QuadError, ValueError):
    pass


class MalformedTree(QuadError, ValueError):
    pass


# ---- Сэмплеры ----

class ResourceCap(QuadError):
    def __init__(self, cap: int, what: str = "tree"):
        self.cap = cap
        self.what = what
        super().__init__(f"{what} exceeded node cap {cap}")


# ---- Шеффер / окна ----

class WindowExhausted(QuadError):
    def __init__(self, corner: Any = None, detail: str = ""):
        self.corner = corner
        super().__init__(detail or f"successor of corner {corner} lies beyond the truncation window")


class Unstable(QuadError):
    def __init__(self, radius: int, levels: tuple, deeper: Any = None):
        self.radius = radius
        self.levels = levels
        # более глубокая выборка, уже построенная при проверке: продолжать с неё
        self.deeper = deeper
        super().__init__(f"ball of radius {radius} differs between truncation levels {levels}")


class LabelParityViolation(QuadError):
    pass


# ---- Геодезические ----

class SpineHitsUnresolved(QuadError):
    pass


class NoFarWitness(QuadError):
    pass


# ---- Орошары ----

class RootTooDeep(QuadError):
    pass


class WrongTruncation(QuadError):
    pass


class DomainError(QuadError, ValueError):
    pass


class NoConvergence(QuadError):
    pass


# ---- Случайное блуждание ----

class LeftSafeRegion(QuadError):
    def __init__(self, step: int, trace: Any = None):
        self.step = step
        self.trace = trace
        super().__init__(f"walk left the certified region at step {step}")


# ---- Конфигурация ----

class ConfigError(QuadError, ValueError):
    pass
