import os
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="PYTHFORMS_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    # Application settings
    app_name: str = "pythforms"
    log_level: str = "INFO"
    jobs: int = Field(default_factory=lambda: os.cpu_count() or 1, gt=0)

    # Published table ranges
    table_a_max: int = Field(7, gt=1)
    segregated_bound: int = Field(100, gt=2)
    r_max: int = Field(105, gt=0)
    all_one_r_max: int = Field(216, gt=0)
    none_one_r_max: int = Field(273, gt=0)
    general_a_max: int = Field(10, gt=1)
    general_rows: int = Field(20, gt=0)

    # Sweep bounds
    uniqueness_bound: int = Field(1_000_000, gt=2)
    segregated_sweep_bound: int = Field(100_000, gt=2)
    count_law_bound: int = Field(200_000, gt=2)
    structural_a_max: int = Field(1500, gt=1)
    sample_size: int = Field(1000, gt=0)
    sample_a_max: int = Field(200, gt=2)
    seed: int = 20240917
    general_bound: int = Field(100_000, gt=2)
    general_grid_bound: int = Field(10_000, gt=2)
    general_grid_k_max: int = Field(32, gt=0)
    general_grid_l_max: int = Field(6, gt=0)

    # Run ledger (unset: sweeps are not recorded)
    ledger_path: Optional[str] = None


@lru_cache()
def get_settings() -> Settings:
    return Settings()
