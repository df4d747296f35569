# models/results.py

"""
Результаты экспериментов: траектории, финальные значения, статистика boxplot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, NonNegativeInt, model_validator


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    log10-траектория одного процесса; значение в шаге 0 равно 0 и не хранится.
    values[i] относится к шагу first_step + i.
    """

    process_id: str
    values: np.ndarray
    first_step: int = 1
    data_digest: str = ""
    p_digest: Optional[str] = None  # только у конформных процессов
    cells_touched: int = 0

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def steps(self) -> np.ndarray:
        return np.arange(self.first_step, self.first_step + self.values.size)

    @property
    def final(self) -> float:
        return float(self.values[-1])

    def window(self, last: int) -> "Trajectory":
        """Последние last шагов (вид «под лупой»)"""
        if last <= 0 or last >= self.values.size:
            return self
        offset = self.values.size - last
        return Trajectory(
            process_id=self.process_id,
            values=self.values[offset:],
            first_step=self.first_step + offset,
            data_digest=self.data_digest,
            p_digest=self.p_digest,
            cells_touched=self.cells_touched,
        )


class FinalsRecord(NamedTuple):
    """Строка finals CSV"""
    process: str
    run: int
    final_log10: float


class BoxplotStats(BaseModel):
    """Статистика notched boxplot"""

    model_config = ConfigDict(frozen=True)

    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    notch_low: float
    notch_high: float
    n_samples: NonNegativeInt

    @model_validator(mode="after")
    def _check_order(self) -> "BoxplotStats":
        if not self.q1 <= self.median <= self.q3:
            raise ValueError("expected q1 <= median <= q3")
        if not self.notch_low <= self.median <= self.notch_high:
            raise ValueError("notch must contain the median")
        return self

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1
