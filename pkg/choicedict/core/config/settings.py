from typing import List

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Padrões da CLI e do harness. Os dicionários em si só recebem DictionaryConfig."""

    word_width: int = 64
    log_level: str = "WARNING"
    default_fill: str = "zeros"

    # Benchmark
    bench_ops: int = 2000
    bench_seed: int = 0
    bench_n_list: List[int] = [2**8, 2**14, 2**20]

    # Replay
    replay_shrink: bool = True

    model_config = SettingsConfigDict(env_file=".env", env_prefix="CHOICEDICT_", extra="ignore")

    @field_validator("word_width")
    @classmethod
    def _check_word_width(cls, value: int) -> int:
        if value not in (8, 16, 32, 64):
            raise ValueError("word_width deve ser 8, 16, 32 ou 64")
        return value

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()

settings = Settings()
