# utils/step_function.py

"""
Кусочно-постоянная плотность на [0, 1]: представление ставочной функции.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class StepFunction:
    """
    values[i]: значение на открытом интервале (breakpoints[i], breakpoints[i+1]).
    point_values[i]: значение ровно в breakpoints[i]; задаёт соглашение
    о замкнутости интервалов. Если None, точка берёт значение правого интервала.
    """

    breakpoints: np.ndarray
    values: np.ndarray
    point_values: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        bp, vals = self.breakpoints, self.values
        if bp.ndim != 1 or bp.size < 2 or vals.size != bp.size - 1:
            raise ValueError("need len(breakpoints) == len(values) + 1 >= 2")
        if bp[0] != 0.0 or bp[-1] != 1.0 or np.any(np.diff(bp) <= 0):
            raise ValueError("breakpoints must increase from 0 to 1")
        if np.any(vals < 0):
            raise ValueError("density values must be nonnegative")
        if self.point_values is not None and self.point_values.size != bp.size:
            raise ValueError("need one point value per breakpoint")

    @classmethod
    def constant(cls, value: float = 1.0) -> "StepFunction":
        return cls(np.array([0.0, 1.0]), np.array([value]))

    def integral(self) -> float:
        """∫₀¹ f: аналитически, по интервалам"""
        return float(np.dot(self.values, np.diff(self.breakpoints)))

    def __call__(self, p: float) -> float:
        idx = int(np.searchsorted(self.breakpoints, p, side="right")) - 1
        if self.point_values is not None and self.breakpoints[idx] == p:
            return float(self.point_values[idx])
        return float(self.values[min(idx, self.values.size - 1)])
