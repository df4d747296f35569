#/core/logspace.py
"""
Арифметика капитала в log10-пространстве.
Все процессы (BK, sBK, SJ, UB, LB, R) хранят только log10 значения:
UB в лёгком случае доходит до ~10^1600.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np
from scipy.special import logsumexp

from core.exceptions import InvalidFactor

# log10 капитала; -inf = банкротство
LogCapital = float

BANKRUPT: LogCapital = -math.inf
LN10 = math.log(10.0)


def log10_add_factor(capital: LogCapital, factor: float) -> LogCapital:
    """
    Умножить капитал на factor >= 0 в log10-пространстве.
    Нулевой множитель даёт банкротство, которое поглощает все последующие.
    """
    if factor < 0 or math.isnan(factor):
        raise InvalidFactor(factor)
    if capital == BANKRUPT or factor == 0.0:
        return BANKRUPT
    return capital + math.log10(factor)


def log10_mean_exp(log10_values: Iterable[float]) -> float:
    """log10 среднего 10^v без переполнения (через logsumexp)"""
    values = np.asarray(list(log10_values), dtype=float)
    if values.size == 0:
        raise ValueError("log10_mean_exp of an empty sample")
    return float(logsumexp(values * LN10) / LN10 - math.log10(values.size))

