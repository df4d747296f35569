# services/bayes_kelly_service.py

"""
Bayes–Kelly конформный тестовый мартингал.

Байесовский параметр: скрытая последовательность битов с априорным
законом Markov(π₁|₀, π₁|₁); наблюдения: конформные p-values.
Веса w[k, j]: апостериорная вероятность того, что среди первых n
битов k единиц и последний бит равен j. Ставочная функция f_n равна
предсказательной плотности p_n, и f_n(p_n) совпадает с суммой
ненормированных весов на шаге n.

Шаг n стоит O(n) операций, весь прогон: O(N²).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from core.exceptions import ZeroNormalizer
from core.logspace import LogCapital, log10_add_factor
from models.markov import FIRST_PROB_ONE, MarkovParams
from services.base import BaseProcess
from utils.step_function import StepFunction


@dataclass(frozen=True, eq=False)
class WeightTable:
    """
    Апостериорные веса на шаге n: w0[k] = w[k, 0], w1[k] = w[k, 1], k = 0..n.
    """

    n: int
    w0: np.ndarray
    w1: np.ndarray

    def __post_init__(self) -> None:
        if self.w0.shape != (self.n + 1,) or self.w1.shape != (self.n + 1,):
            raise ValueError(f"weight arrays must have length n+1={self.n + 1}")
        self.w0.setflags(write=False)
        self.w1.setflags(write=False)

    def __getitem__(self, key: Tuple[int, int]) -> float:
        k, j = key
        if not 0 <= k <= self.n:
            return 0.0
        return float(self.w1[k] if j else self.w0[k])

    def total(self) -> float:
        return float(self.w0.sum() + self.w1.sum())

    def as_dict(self) -> Dict[Tuple[int, int], float]:
        return {
            (k, j): self[k, j] for k in range(self.n + 1) for j in (0, 1)
        }


def bk_init() -> WeightTable:
    """w¹: априорный закон первого бита, p₁ информации не несёт"""
    return WeightTable(
        n=1,
        w0=np.array([1.0 - FIRST_PROB_ONE, 0.0]),
        w1=np.array([0.0, FIRST_PROB_ONE]),
    )


def bk_likelihood(n: int, k: int, j: int, p: float) -> float:
    """
    l^n_k(j, p): плотность p_{n+1} при условии, что среди первых n битов
    k единиц и следующий бит равен j.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if j:
        return (n + 1) / (k + 1) if p <= (k + 1) / (n + 1) else 0.0
    return (n + 1) / (n - k + 1) if p >= k / (n + 1) else 0.0


def _unnormalized(weights: WeightTable, params: MarkovParams, p: float) -> Tuple[np.ndarray, np.ndarray]:
    m = weights.n + 1
    w0, w1 = weights.w0, weights.w1

    # переход в 0 не меняет k, в 1: увеличивает на единицу
    into0 = w0 * params.pi_0_given_0 + w1 * params.pi_0_given_1
    into1 = w0 * params.pi_1_given_0 + w1 * params.pi_1_given_1

    k0 = np.arange(m)
    k1 = np.arange(1, m + 1)
    new0 = np.zeros(m + 1)
    new1 = np.zeros(m + 1)
    new0[:m] = np.where(p >= k0 / m, into0 * (m / (m - k0)), 0.0)
    new1[1:] = np.where(p <= k1 / m, into1 * (m / k1), 0.0)
    return new0, new1


def bk_update(weights: WeightTable, params: MarkovParams, p: float) -> Tuple[WeightTable, float]:
    """
    Рекурсия весов n−1 → n по p-value p_n.

    Returns:
        (нормированная таблица на шаге n, нормировочная сумма = f_n(p_n))
    """
    new0, new1 = _unnormalized(weights, params, p)
    normalizer = float(new0.sum() + new1.sum())
    if not normalizer > 0.0:
        raise ZeroNormalizer(weights.n + 1, p)
    return WeightTable(weights.n + 1, new0 / normalizer, new1 / normalizer), normalizer


def bk_predictive(weights: WeightTable, params: MarkovParams) -> StepFunction:
    """
    Ставочная функция f_n по весам шага n−1: смесь U[0, (k+1)/n] и U[k/n, 1].
    Точки разбиения: все i/n; в точках индикаторы нестрогие.
    """
    m = weights.n + 1
    k = np.arange(m)
    w0, w1 = weights.w0, weights.w1
    # a_k: вклад U[0, (k+1)/m], b_k: вклад U[k/m, 1]
    a = (w0 * params.pi_1_given_0 + w1 * params.pi_1_given_1) * (m / (k + 1))
    b = (w0 * params.pi_0_given_0 + w1 * params.pi_0_given_1) * (m / (m - k))

    suffix_a = np.cumsum(a[::-1])[::-1]  # Σ_{k≥i} a_k
    prefix_b = np.cumsum(b)  # Σ_{k≤i} b_k
    values = suffix_a + prefix_b

    # в точке i/m: Σ_{k≥i−1} a_k + Σ_{k≤i} b_k
    i = np.arange(m + 1)
    a_part = suffix_a[np.maximum(i - 1, 0)]
    b_part = prefix_b[np.minimum(i, m - 1)]
    return StepFunction(i / m, values, point_values=a_part + b_part)


def bk_martingale_step(
    state: Tuple[Optional[WeightTable], LogCapital],
    params: MarkovParams,
    p: float,
) -> Tuple[WeightTable, LogCapital]:
    """
    Шаг мартингала: капитал умножается на f_n(p_n).
    Состояние до первого шага: (None, 0.0); на шаге 1 f₁ ≡ 1.
    """
    weights, capital = state
    if weights is None:
        return bk_init(), capital
    new_weights, factor = bk_update(weights, params, p)
    return new_weights, log10_add_factor(capital, factor)


def export_weight_snapshot(weights: WeightTable) -> Dict[int, float]:
    """Маргинальные веса по k: w[k, 0] + w[k, 1]"""
    marginal = weights.w0 + weights.w1
    return {k: float(marginal[k]) for k in range(weights.n + 1)}


class BayesKellyProcess(BaseProcess):
    """Bayes–Kelly мартингал как автомат"""

    uses_p_values = True

    def __init__(self, params: MarkovParams, process_id: str = "bk"):
        super().__init__(process_id)
        self.params = params
        self.weights: Optional[WeightTable] = None

    def update(self, z: int, p: float) -> LogCapital:
        if self.weights is not None:
            self.cells_touched += 2 * (self.weights.n + 1)
        self.weights, self.log_value = bk_martingale_step(
            (self.weights, self.log_value), self.params, p
        )
        self.step_index += 1
        return self.log_value

    def reset(self) -> None:
        super().reset()
        self.weights = None
