# tests/conftest.py

"""Общие фикстуры: пресеты, сиды, переборный байесовский оракул"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, Sequence, Tuple

import pytest

from core.log import setup_logging
from core.rng import RandomSource
from models.markov import MarkovParams


@pytest.fixture(autouse=True, scope="session")
def _quiet_logging() -> None:
    setup_logging("WARNING", "console")


@pytest.fixture
def hard() -> MarkovParams:
    return MarkovParams.preset("hard")


@pytest.fixture
def easy() -> MarkovParams:
    return MarkovParams.preset("easy")


@pytest.fixture
def root_rng() -> RandomSource:
    return RandomSource(2021)


def _p_density(prefix: Tuple[int, ...], p: float) -> float:
    """Плотность p_n при известных z_1..z_n (закон U[0,k/n] / U[k/n,1])"""
    n = len(prefix)
    k = sum(prefix)
    if prefix[-1] == 1:
        return n / k if p <= k / n else 0.0
    return n / (n - k) if p >= k / n else 0.0


def brute_force_posterior_impl(
    params: MarkovParams, p_values: Sequence[float]
) -> Dict[Tuple[int, int], float]:
    """
    Апостериорные веса (k, j) перебором всех 2ⁿ последовательностей:
    априорно Markov(params), правдоподобие: произведение плотностей p_i.
    """
    n = len(p_values)
    mass: Dict[Tuple[int, int], float] = {}
    for bits in itertools.product((0, 1), repeat=n):
        weight = 0.5
        for prev, cur in zip(bits, bits[1:]):
            weight *= params.transition(cur, prev)
        for i in range(1, n + 1):
            weight *= _p_density(bits[:i], p_values[i - 1])
            if weight == 0.0:
                break
        key = (sum(bits), bits[-1])
        mass[key] = mass.get(key, 0.0) + weight
    total = sum(mass.values())
    return {key: value / total for key, value in mass.items()}


@pytest.fixture
def brute_force_posterior() -> Callable[[MarkovParams, Sequence[float]], Dict[Tuple[int, int], float]]:
    return brute_force_posterior_impl
