# services/conformal_service.py

"""
Онлайн-преобразование битов в рандомизированные конформные p-values
при тождественной мере неконформности (score(z) = z).

Общая формула (#{scores > текущего} + θ·#{равных}) / n для битов даёт:
    z = 1:  p = θ·k/n             ~ U[0, k/n]
    z = 0:  p = (k + θ·(n−k))/n   ~ U[k/n, 1]
где n, k считаются с учётом текущего наблюдения.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from core.rng import RandomSource
from models.p_value import PValue

# наибольшее double < 1: при θ = 1 − 2⁻⁵³ формула для z = 0 округляется до 1.0
_P_MAX = float(np.nextafter(1.0, 0.0))


@dataclass(frozen=True, slots=True)
class ConformalState:
    """n: число наблюдений, k: число единиц среди них"""
    n: int = 0
    k: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")


def next_p_value(state: ConformalState, z: int, theta: float) -> Tuple[PValue, ConformalState]:
    """Один шаг: новое наблюдение z и рандомизатор θ ∈ (0, 1)"""
    n = state.n + 1
    k = state.k + z
    if z:
        p = theta * k / n
    else:
        p = min((k + theta * (n - k)) / n, _P_MAX)
    return PValue(p), ConformalState(n, k)


def p_value_stream(observations: Sequence[int], rng: RandomSource) -> np.ndarray:
    """
    Поток p-values для последовательности битов; один θ на наблюдение,
    в порядке наблюдений. Векторизованная свёртка next_p_value.
    """
    z = np.asarray(observations, dtype=np.int64)
    if z.size == 0:
        return np.empty(0, dtype=float)
    return p_values_from_thetas(z, rng.uniforms(z.size))


def p_values_from_thetas(observations: Sequence[int], thetas: Sequence[float]) -> np.ndarray:
    """Векторизованная формула при заданных рандомизаторах; результат строго меньше 1"""
    z = np.asarray(observations, dtype=np.int64)
    theta = np.asarray(thetas, dtype=float)
    n = np.arange(1, z.size + 1)
    k = np.cumsum(z)
    p = np.where(z == 1, theta * k / n, (k + theta * (n - k)) / n)
    return np.minimum(p, _P_MAX)


def p_value_fold(observations: Sequence[int], thetas: Sequence[float]) -> List[PValue]:
    """Та же последовательность пошагово (эталон для векторизованной версии)"""
    state = ConformalState()
    result: List[PValue] = []
    for z, theta in zip(observations, thetas):
        p, state = next_p_value(state, int(z), float(theta))
        result.append(p)
    return result


def stream_digest(values: np.ndarray) -> str:
    """SHA-256 потока (биты или p-values) для проверки общего потока"""
    return hashlib.sha256(np.ascontiguousarray(values).tobytes()).hexdigest()
