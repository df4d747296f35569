# services/benchmark_service.py

"""
Бенчмарки отношения правдоподобия по сырому потоку битов:
    UB_n = Markov(z₁..z_n) / Ber(0.5)(z₁..z_n)
    LB_n = Markov(z₁..z_n) / Ber(π̂)(z₁..z_n),  π̂ = k/n (ОМП)
UB₀ = LB₀ = 1. LB ≤ UB всегда: ОМП-знаменатель не меньше Ber(0.5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from scipy.special import xlogy

from core.logspace import LN10, LogCapital
from models.markov import MarkovParams
from services.base import BaseProcess

LOG10_HALF = math.log10(0.5)


@dataclass(frozen=True, slots=True)
class BenchmarkState:
    """
    Достаточные статистики. t_ab: число переходов a → b,
    z1: первый бит, last: последний бит.
    """

    n: int = 0
    k: int = 0
    t00: int = 0
    t01: int = 0
    t10: int = 0
    t11: int = 0
    z1: Optional[int] = None
    last: Optional[int] = None
    log10_markov: float = 0.0

    def __post_init__(self) -> None:
        if self.t00 + self.t01 + self.t10 + self.t11 != max(self.n - 1, 0):
            raise ValueError("transition counts must sum to max(n - 1, 0)")

    def advance(self, z: int, log10_prob: float) -> "BenchmarkState":
        """Добавить бит z с вероятностью 10^log10_prob под альтернативой"""
        if self.last is None:
            return replace(self, n=1, k=z, z1=z, last=z, log10_markov=log10_prob)
        key = f"t{self.last}{z}"
        return replace(
            self,
            n=self.n + 1,
            k=self.k + z,
            last=z,
            log10_markov=self.log10_markov + log10_prob,
            **{key: getattr(self, key) + 1},
        )


def markov_log10_likelihood(state: BenchmarkState, params: MarkovParams) -> float:
    """log10 Markov-вероятности префикса из достаточных статистик"""
    if state.n == 0:
        return 0.0
    return LOG10_HALF + (
        state.t00 * math.log10(params.pi_0_given_0)
        + state.t01 * math.log10(params.pi_1_given_0)
        + state.t10 * math.log10(params.pi_0_given_1)
        + state.t11 * math.log10(params.pi_1_given_1)
    )


def bernoulli_mle_log10_likelihood(n: int, k: int) -> float:
    """log10 max_π Ber(π)-правдоподобия; 0·log 0 = 0"""
    if n == 0:
        return 0.0
    return float(xlogy(k, k / n) + xlogy(n - k, (n - k) / n)) / LN10


def ub_step(state: BenchmarkState, params: MarkovParams, z: int) -> Tuple[BenchmarkState, LogCapital]:
    """
    Returns:
        (новое состояние, приращение log10 UB)
    """
    if state.last is None:
        log10_prob = math.log10(params.first_prob_one if z else 1.0 - params.first_prob_one)
    else:
        log10_prob = math.log10(params.transition(z, state.last))
    return state.advance(z, log10_prob), log10_prob - LOG10_HALF


def ub_value(state: BenchmarkState) -> LogCapital:
    return state.log10_markov - state.n * LOG10_HALF


def lb_value(state: BenchmarkState, params: MarkovParams) -> LogCapital:
    """log10 LB_n; знаменатель пересчитывается по (n, k) на каждом шаге"""
    if state.n == 0:
        return 0.0
    return state.log10_markov - bernoulli_mle_log10_likelihood(state.n, state.k)


class UpperBenchmarkProcess(BaseProcess):
    def __init__(self, params: MarkovParams, process_id: str = "ub"):
        super().__init__(process_id)
        self.params = params
        self.state = BenchmarkState()

    def update(self, z: int, p: float) -> LogCapital:
        self.state, increment = ub_step(self.state, self.params, z)
        self.log_value += increment
        self.cells_touched += 1
        self.step_index += 1
        return self.log_value

    def reset(self) -> None:
        super().reset()
        self.state = BenchmarkState()


class LowerBenchmarkProcess(UpperBenchmarkProcess):
    def __init__(self, params: MarkovParams, process_id: str = "lb"):
        super().__init__(params, process_id)

    def update(self, z: int, p: float) -> LogCapital:
        self.state, _ = ub_step(self.state, self.params, z)
        self.log_value = lb_value(self.state, self.params)
        self.cells_touched += 1
        self.step_index += 1
        return self.log_value
