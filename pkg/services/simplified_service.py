# services/simplified_service.py

"""
Упрощённый Bayes–Kelly мартингал: O(1) на шаг.

Если веса сосредоточены около k ≈ n/2, ставочная функция сводится к
    f_n(p) = 2·π₁|j·1{p ≤ 0.5} + 2·π₀|j·1{p > 0.5},
а неизвестный последний бит j заменяется на 1{p_{n−1} ≤ 0.5}.
"""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from core.logspace import LogCapital, log10_add_factor
from models.markov import MarkovParams
from services.base import BaseProcess
from utils.step_function import StepFunction


def simplified_betting_function(params: MarkovParams, j: int) -> StepFunction:
    """f_n при заданном j; точка 0.5 относится к левому интервалу"""
    low = 2.0 * params.pi_one_given(j)
    high = 2.0 * (1.0 - params.pi_one_given(j))
    return StepFunction(
        np.array([0.0, 0.5, 1.0]),
        np.array([low, high]),
        point_values=np.array([low, low, high]),
    )


def simplified_bk_step(
    prev_p: Optional[float], params: MarkovParams, p: float
) -> Tuple[float, float]:
    """
    Returns:
        (множитель капитала, p для следующего шага)
    """
    if prev_p is None:
        return 1.0, p
    j = 1 if prev_p <= 0.5 else 0
    pi_one = params.pi_one_given(j)
    factor = 2.0 * pi_one if p <= 0.5 else 2.0 * (1.0 - pi_one)
    return factor, p


class SimplifiedBayesKellyProcess(BaseProcess):
    """sBK как автомат"""

    uses_p_values = True

    def __init__(self, params: MarkovParams, process_id: str = "sbk"):
        super().__init__(process_id)
        self.params = params
        self.prev_p: Optional[float] = None

    def update(self, z: int, p: float) -> LogCapital:
        factor, self.prev_p = simplified_bk_step(self.prev_p, self.params, p)
        self.log_value = log10_add_factor(self.log_value, factor)
        self.cells_touched += 1
        self.step_index += 1
        return self.log_value

    def reset(self) -> None:
        super().reset()
        self.prev_p = None
