# services/eprocess_service.py

"""
Безопасный e-процесс R для IID-нуля против марковских альтернатив.

Числитель: смесь Джеффриса (Beta(½, ½), оценка Кричевского–Трофимова)
по обеим переходным вероятностям, первый бит с вероятностью 0.5.
Знаменатель: Ber(π̂)-правдоподобие с ОМП π̂ = k/n. Так как ОМП-знаменатель
не меньше Ber(π)-правдоподобия при любом π, R_n ≤ M_n^(π), где M^(π) есть
отношение числителя к Ber(π), тестовый мартингал относительно Ber(π).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from scipy.special import betaln

from core.logspace import LN10, LogCapital
from services.base import BaseProcess
from services.benchmark_service import LOG10_HALF, bernoulli_mle_log10_likelihood

_BETALN_HALF = float(betaln(0.5, 0.5))  # ln π


def kt_log_marginal(a: int, b: int) -> float:
    """log10 ∫ θ^a (1−θ)^b dBeta(½, ½)(θ) = log10 B(a+½, b+½)/B(½, ½)"""
    if a < 0 or b < 0:
        raise ValueError(f"counts must be nonnegative, got a={a}, b={b}")
    return (float(betaln(a + 0.5, b + 0.5)) - _BETALN_HALF) / LN10


@dataclass(frozen=True, slots=True)
class EProcessState:
    n: int = 0
    k: int = 0
    t00: int = 0
    t01: int = 0
    t10: int = 0
    t11: int = 0
    last: Optional[int] = None

    def __post_init__(self) -> None:
        if self.t00 + self.t01 + self.t10 + self.t11 != max(self.n - 1, 0):
            raise ValueError("transition counts must sum to max(n - 1, 0)")

    def advance(self, z: int) -> "EProcessState":
        if self.last is None:
            return replace(self, n=1, k=z, last=z)
        key = f"t{self.last}{z}"
        return replace(self, n=self.n + 1, k=self.k + z, last=z, **{key: getattr(self, key) + 1})


def r_numerator_log10(state: EProcessState) -> float:
    """log10 смеси: 0.5 × KT(0→·) × KT(1→·)"""
    if state.n == 0:
        return 0.0
    return (
        LOG10_HALF
        + kt_log_marginal(state.t01, state.t00)
        + kt_log_marginal(state.t11, state.t10)
    )


def bernoulli_log10_likelihood(n: int, k: int, pi: float) -> float:
    """log10 Ber(π)-правдоподобия k единиц из n; 0·log 0 = 0"""
    ones = k * math.log10(pi) if k else 0.0
    zeros = (n - k) * math.log10(1.0 - pi) if n - k else 0.0
    return ones + zeros


def r_step(state: EProcessState, z: int) -> Tuple[EProcessState, LogCapital]:
    """
    Returns:
        (новое состояние, log10 R_n)
    """
    new_state = state.advance(z)
    value = r_numerator_log10(new_state) - bernoulli_mle_log10_likelihood(new_state.n, new_state.k)
    return new_state, value


class EProcess(BaseProcess):
    """R как автомат; R₀ = 1"""

    def __init__(self, process_id: str = "r"):
        super().__init__(process_id)
        self.state = EProcessState()

    def update(self, z: int, p: float) -> LogCapital:
        self.state, self.log_value = r_step(self.state, z)
        self.cells_touched += 1
        self.step_index += 1
        return self.log_value

    def reset(self) -> None:
        super().reset()
        self.state = EProcessState()
