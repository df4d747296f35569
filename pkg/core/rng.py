#/core/rng.py
"""
Детерминированные источники случайности.

Каждый прогон получает независимые подпотоки по ключу
(run_index, purpose): один для данных, другой для рандомизаторов θ.
Это делает прогоны независимыми от порядка выполнения и позволяет
запускать их параллельно.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Tuple

import numpy as np


class Purpose(IntEnum):
    """Назначение подпотока"""
    DATA = 0
    RANDOMIZER = 1


class RandomSource:
    """
    Поток равномерных величин на открытом интервале (0, 1).
    Один и тот же (seed, spawn_key) всегда даёт одну и ту же последовательность.
    """

    def __init__(self, seed: int, spawn_key: Tuple[int, ...] = ()):
        if seed < 0:
            raise ValueError(f"seed must be unsigned, got {seed}")
        self.seed = seed
        self.spawn_key = tuple(spawn_key)
        sequence = np.random.SeedSequence(entropy=seed, spawn_key=self.spawn_key)
        self._generator = np.random.Generator(np.random.PCG64(sequence))

    def uniforms(self, size: int) -> np.ndarray:
        """Следующие size величин из (0, 1)"""
        values = self._generator.random(size)
        # random() отдаёт [0, 1): перетягиваем нули
        zeros = values == 0.0
        while zeros.any():
            values[zeros] = self._generator.random(int(zeros.sum()))
            zeros = values == 0.0
        return values

    def __repr__(self) -> str:
        return f"<RandomSource(seed={self.seed}, spawn_key={self.spawn_key})>"


def make_substream(root: RandomSource, run_index: int, purpose_tag: int) -> RandomSource:
    """
    Подпоток для пары (run_index, purpose_tag).
    Не зависит от того, сколько величин уже выбрано из root.
    """
    return RandomSource(root.seed, root.spawn_key + (int(run_index), int(purpose_tag)))
