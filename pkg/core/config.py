#/core/config.py
"""
Конфигурация приложения через Pydantic.
Значения по умолчанию: стандартные эксперименты; переопределяются
переменными окружения CONFORMAL_* или файлом .env.
"""

from typing import List, Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Настройки приложения"""

    model_config = SettingsConfigDict(
        env_prefix="CONFORMAL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
        json_schema_extra={
            "example": {
                "CONFORMAL_DEFAULT_SEED": 2021,
                "CONFORMAL_SJ_JUMP_RATES": "[0.001, 0.01]",
                "CONFORMAL_DEFAULT_THREADS": 4,
            }
        },
    )

    # ========== RANDOMNESS ==========
    DEFAULT_SEED: int = Field(default=2021, ge=0)  # стандартный сид экспериментов

    # ========== SIMPLE JUMPER ==========
    SJ_JUMP_RATES: List[float] = [0.0001, 0.001, 0.01, 0.1]

    # ========== SWEEPS ==========
    DEFAULT_THREADS: int = Field(default=1, ge=1)
    DEFAULT_RUNS: int = Field(default=100, ge=1)

    # ========== OUTPUT ==========
    CSV_SIGNIFICANT_DIGITS: int = Field(default=9, ge=1, le=17)
    SVG_HASH_SALT: str = "conformal-markov"

    # ========== BOXPLOTS ==========
    NOTCH_CONSTANT: float = 1.57
    WHISKER_IQR: float = 1.5
    MIN_BOXPLOT_SAMPLES: int = 5

    # ========== LOGGING ==========
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: Literal["console", "json"] = "console"

    # ========== DEBUG ==========
    DEBUG: bool = False

    @field_validator("SJ_JUMP_RATES")
    @classmethod
    def _check_jump_rates(cls, value: List[float]) -> List[float]:
        for rate in value:
            if not 0.0 <= rate <= 1.0:
                raise ValueError(f"jumping rate {rate} outside [0, 1]")
        return value

    @property
    def CSV_FLOAT_FORMAT(self) -> str:
        """Формат чисел в CSV (значащие цифры)"""
        return f"{{:.{self.CSV_SIGNIFICANT_DIGITS}g}}"


# ✅ Глобальный экземпляр конфигурации
settings = Settings()
