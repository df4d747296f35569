# services/analytics_service.py

"""
Агрегация результатов sweep: статистика notched boxplot, выбор лучшего J.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, Optional

import numpy as np
import structlog

from core.config import settings
from core.exceptions import TooFewSamples
from models.results import BoxplotStats

logger = structlog.get_logger(__name__)


def boxplot_stats(
    samples: Iterable[float],
    notch_constant: Optional[float] = None,
    whisker_iqr: Optional[float] = None,
) -> BoxplotStats:
    """
    Квартили: линейная интерполяция; усы: крайние точки в пределах
    whisker_iqr·IQR от квартилей; выемка: median ± notch_constant·IQR/√n.
    """
    notch_constant = settings.NOTCH_CONSTANT if notch_constant is None else notch_constant
    whisker_iqr = settings.WHISKER_IQR if whisker_iqr is None else whisker_iqr

    values = np.sort(np.asarray(list(samples), dtype=float))
    if values.size < settings.MIN_BOXPLOT_SAMPLES:
        raise TooFewSamples(values.size, settings.MIN_BOXPLOT_SAMPLES)

    q1, median, q3 = np.percentile(values, [25, 50, 75], method="linear")
    iqr = q3 - q1
    inside = values[(values >= q1 - whisker_iqr * iqr) & (values <= q3 + whisker_iqr * iqr)]
    half_notch = notch_constant * iqr / math.sqrt(values.size)

    return BoxplotStats(
        median=float(median),
        q1=float(q1),
        q3=float(q3),
        whisker_low=float(inside.min()),
        whisker_high=float(inside.max()),
        notch_low=float(median - half_notch),
        notch_high=float(median + half_notch),
        n_samples=int(values.size),
    )


def summarize_finals(finals: Dict[str, np.ndarray]) -> Dict[str, BoxplotStats]:
    """Статистика по каждому процессу, в порядке ключей"""
    return {name: boxplot_stats(values) for name, values in finals.items()}


def best_jump_rate(finals: Dict[str, np.ndarray]) -> Optional[str]:
    """Идентификатор sj_<J> с наибольшей медианой финальных значений"""
    candidates = {
        name: float(np.median(values))
        for name, values in finals.items()
        if name.startswith("sj_")
    }
    if not candidates:
        return None
    best = max(candidates, key=candidates.__getitem__)
    logger.debug("best_jump_rate", process=best, median=candidates[best])
    return best
