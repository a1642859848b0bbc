"""
Воспроизводимые потоки случайных чисел.

Генератор — numpy Philox (счётчиковый), зерно — SeedSequence(seed, spawn_key).
Один и тот же (seed, stream) даёт ту же последовательность; разные stream —
независимые потоки. Частые выборки (число детей, шаг метки) берутся блоками.
"""
from __future__ import annotations

from typing import List, Tuple

import numpy as np

DEFAULT_BLOCK = 4096


class RngStream:
    def __init__(self, seed: int, stream: int = 0, *, spawn_key: Tuple[int, ...] = (), block: int = DEFAULT_BLOCK):
        self.seed = int(seed)
        self.stream = int(stream)
        self.spawn_key = tuple(spawn_key) or (self.stream,)
        self.block = int(block)
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=self.spawn_key)
        self._gen = np.random.Generator(np.random.Philox(seq))
        self._off: List[int] = []
        self._off_i = 0
        self._inc: List[int] = []
        self._inc_i = 0

    def spawn(self, sub: int) -> "RngStream":
        """Дочерний поток, независимый от родителя и от других sub."""
        return RngStream(self.seed, self.stream, spawn_key=self.spawn_key + (int(sub),), block=self.block)

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    # ---- блочные выборки ----

    def offspring(self) -> int:
        """Геометрическое(½) число детей: P(k) = 2^{−(k+1)}."""
        if self._off_i >= len(self._off):
            self._off = (self._gen.geometric(0.5, size=self.block) - 1).tolist()
            self._off_i = 0
        k = self._off[self._off_i]
        self._off_i += 1
        return k

    def step(self) -> int:
        """Равномерное приращение метки в {−1, 0, 1}."""
        if self._inc_i >= len(self._inc):
            self._inc = (self._gen.integers(-1, 2, size=self.block)).tolist()
            self._inc_i = 0
        x = self._inc[self._inc_i]
        self._inc_i += 1
        return x

    # ---- прочее ----

    def bit(self) -> int:
        return int(self._gen.integers(0, 2))

    def integers(self, low: int, high: int) -> int:
        return int(self._gen.integers(low, high))

    def random(self) -> float:
        return float(self._gen.random())

    def permutation(self, n_or_seq):
        return self._gen.permutation(n_or_seq)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, key={self.spawn_key})"
