#/services/base.py

"""
Базовый класс для всех тестовых процессов.
Процесс есть однопоточный автомат: на каждом шаге получает бит z и
конформное p-value и возвращает текущий log10 своего значения.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

import structlog

from core.logspace import LogCapital


class BaseProcess(ABC):
    """
    Общая часть процессов (ub, lb, bk, sbk, sj, r).
    Содержит повторяющуюся логику.
    """

    # Использует ли процесс p-values (конформные мартингалы) или только биты
    uses_p_values: bool = False

    def __init__(self, process_id: str):
        """
        Args:
            process_id: имя процесса в выходных данных
        """
        self.process_id = process_id
        self.log_value: LogCapital = 0.0
        self.step_index = 0
        self.cells_touched = 0  # счётчик операций (модель стоимости)
        self.logger = structlog.get_logger(self.__class__.__name__)

    @abstractmethod
    def update(self, z: int, p: float) -> LogCapital:
        """Обработать шаг и вернуть log10 текущего значения"""

    def reset(self) -> None:
        """Сбросить в начальное состояние (значение 1)"""
        self.log_value = 0.0
        self.step_index = 0
        self.cells_touched = 0

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__}(id={self.process_id}, "
            f"n={self.step_index}, log10={self.log_value:.4g})>"
        )
