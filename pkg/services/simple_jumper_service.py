# services/simple_jumper_service.py

"""
Simple Jumper: базовый конформный мартингал.
Три ставочные функции f_ε(p) = 1 + ε(p − 0.5), ε ∈ {−1, 0, 1};
на каждом шаге доля J капитала равномерно перераспределяется между
состояниями (прыжок), затем каждое состояние делает ставку.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from core.logspace import LogCapital, log10_add_factor
from services.base import BaseProcess

EPSILONS: Tuple[int, int, int] = (-1, 0, 1)


def jumper_betting_function(epsilon: int, p: float) -> float:
    return 1.0 + epsilon * (p - 0.5)


@dataclass(frozen=True, slots=True)
class SimpleJumperState:
    """capital[i]: капитал состояния EPSILONS[i]"""

    capital: Tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3)
    jump_rate: float = 0.01

    def __post_init__(self) -> None:
        if not 0.0 <= self.jump_rate <= 1.0:
            raise ValueError(f"jumping rate {self.jump_rate} outside [0, 1]")
        if any(c < 0 for c in self.capital):
            raise ValueError("capital must be nonnegative")

    @property
    def total(self) -> float:
        return sum(self.capital)


def simple_jumper_step(state: SimpleJumperState, p: float) -> Tuple[SimpleJumperState, float]:
    """
    Returns:
        (новое состояние, множитель суммарного капитала)
    """
    before = state.total
    jumped = [
        (1.0 - state.jump_rate) * c + state.jump_rate / 3.0 * before
        for c in state.capital
    ]
    after = tuple(
        c * jumper_betting_function(eps, p) for c, eps in zip(jumped, EPSILONS)
    )
    return SimpleJumperState(after, state.jump_rate), sum(after) / before


class SimpleJumperProcess(BaseProcess):
    """
    SJ как автомат. Капиталы хранятся нормированными (сумма 1),
    общий уровень: в log10, чтобы не переполниться на длинных прогонах.
    """

    uses_p_values = True

    def __init__(self, jump_rate: float, process_id: str = ""):
        super().__init__(process_id or f"sj_{jump_rate:g}")
        self.jump_rate = jump_rate
        self.state = SimpleJumperState(jump_rate=jump_rate)

    def update(self, z: int, p: float) -> LogCapital:
        new_state, factor = simple_jumper_step(self.state, p)
        total = new_state.total
        self.state = SimpleJumperState(
            tuple(c / total for c in new_state.capital), self.jump_rate
        )
        self.log_value = log10_add_factor(self.log_value, factor)
        self.cells_touched += len(EPSILONS)
        self.step_index += 1
        return self.log_value

    def reset(self) -> None:
        super().reset()
        self.state = SimpleJumperState(jump_rate=self.jump_rate)
