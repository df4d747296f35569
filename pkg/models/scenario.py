# models/scenario.py

"""
Сценарий эксперимента: длина, альтернатива, закон данных, сид.
"""

from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt

from core.config import settings
from models.markov import MarkovParams

SCENARIO_PRESETS: Dict[str, int] = {
    "large": 10_000,
    "medium": 1_000,
    "small": 100,
}


class DataLaw(BaseModel):
    """
    Закон, из которого генерируются данные:
    null_pi is None → Markov(case), иначе Bernoulli(null_pi).
    """

    model_config = ConfigDict(frozen=True)

    null_pi: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    @property
    def is_markov(self) -> bool:
        return self.null_pi is None

    def describe(self, case: MarkovParams) -> str:
        if self.is_markov:
            return f"markov({case.pi_1_given_0},{case.pi_1_given_1})"
        return f"bernoulli({self.null_pi})"


class Scenario(BaseModel):
    """Один модельный сценарий"""

    model_config = ConfigDict(frozen=True)

    n_steps: PositiveInt
    case: MarkovParams
    data_law: DataLaw = DataLaw()
    seed: NonNegativeInt = settings.DEFAULT_SEED

    @classmethod
    def from_presets(
        cls,
        case: str,
        scenario: str,
        seed: Optional[int] = None,
        null_pi: Optional[float] = None,
    ) -> "Scenario":
        """Собрать сценарий по именам пресетов (hard/easy, large/medium/small)"""
        return cls(
            n_steps=SCENARIO_PRESETS[scenario],
            case=MarkovParams.preset(case),
            data_law=DataLaw(null_pi=null_pi),
            seed=settings.DEFAULT_SEED if seed is None else seed,
        )

    def with_steps(self, n_steps: int) -> "Scenario":
        return self.model_copy(update={"n_steps": n_steps})
