#/core/exceptions.py

"""
Кастомные исключения приложения.
Для удобной обработки ошибок в handlers и services.
"""

from typing import Iterable, Optional


class ConformalTestingError(Exception):
    """Базовое исключение для всех ошибок библиотеки"""
    pass


class ZeroNormalizer(ConformalTestingError):
    """Альтернатива приписала нулевую плотность наблюдённому p-value"""
    def __init__(self, step: int, p_value: float):
        self.step = step
        self.p_value = p_value
        super().__init__(
            f"Zero posterior mass at step {step} for p-value {p_value!r}"
        )


class UnknownProcess(ConformalTestingError):
    """Неизвестный идентификатор процесса"""
    def __init__(self, name: str, valid_values: Iterable[str]):
        self.name = name
        self.valid_values = sorted(valid_values)
        super().__init__(
            f"Unknown process '{name}'. Valid values: {self.valid_values}"
        )


class TooFewSamples(ConformalTestingError):
    """Слишком мало значений для boxplot"""
    def __init__(self, n_samples: int, minimum: int):
        self.n_samples = n_samples
        self.minimum = minimum
        super().__init__(
            f"Boxplot needs at least {minimum} samples, got {n_samples}"
        )


class InvalidFactor(ConformalTestingError):
    """Отрицательный множитель капитала"""
    def __init__(self, factor: float):
        self.factor = factor
        super().__init__(f"Capital factor must be nonnegative, got {factor!r}")


class InvalidArgument(ConformalTestingError):
    """Не удалось разобрать значение флага (case, scenario, null, списки)"""
    def __init__(self, kind: str, raw: str, hint: Optional[str] = None):
        self.kind = kind
        self.raw = raw
        super().__init__(
            f"Invalid {kind} '{raw}'" + (f". Expected: {hint}" if hint else "")
        )
