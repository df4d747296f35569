# models/markov.py

"""
Параметры марковской альтернативы Markov(π₁|₀, π₁|₁).
Вероятность того, что первое наблюдение равно 1, всегда 0.5.
"""

from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field

FIRST_PROB_ONE = 0.5

# ✅ Пресеты: трудный и лёгкий случаи
CASE_PRESETS: Dict[str, Tuple[float, float]] = {
    "hard": (0.4, 0.6),
    "easy": (0.1, 0.9),
}


class MarkovParams(BaseModel):
    """Переходные вероятности; вырожденные цепи (0 или 1) отклоняются"""

    model_config = ConfigDict(frozen=True)

    pi_1_given_0: float = Field(gt=0.0, lt=1.0)
    pi_1_given_1: float = Field(gt=0.0, lt=1.0)

    @property
    def first_prob_one(self) -> float:
        return FIRST_PROB_ONE

    @property
    def pi_0_given_0(self) -> float:
        return 1.0 - self.pi_1_given_0

    @property
    def pi_0_given_1(self) -> float:
        return 1.0 - self.pi_1_given_1

    def pi_one_given(self, j: int) -> float:
        """π₁|j"""
        return self.pi_1_given_1 if j else self.pi_1_given_0

    def transition(self, to_bit: int, from_bit: int) -> float:
        """Вероятность перехода from_bit → to_bit"""
        p_one = self.pi_one_given(from_bit)
        return p_one if to_bit else 1.0 - p_one

    @classmethod
    def preset(cls, name: str) -> "MarkovParams":
        pi10, pi11 = CASE_PRESETS[name]
        return cls(pi_1_given_0=pi10, pi_1_given_1=pi11)

    def __repr__(self) -> str:
        return f"<MarkovParams(π₁|₀={self.pi_1_given_0}, π₁|₁={self.pi_1_given_1})>"
