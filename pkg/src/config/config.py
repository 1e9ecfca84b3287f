from functools import lru_cache
from pydantic import BaseModel, ConfigDict, Field
from typing import Literal, Optional
from dotenv import load_dotenv
import os

load_dotenv()


class OracleConfig(BaseModel):
    """Resource bounds for the GF(q) point-counting oracle."""
    model_config = ConfigDict(validate_default=True)

    max_dim: int = Field(default_factory=lambda: os.getenv("QG_FQ_MAX_DIM", "6"), ge=0)
    max_q: int = Field(default_factory=lambda: os.getenv("QG_FQ_MAX_Q", "7"), ge=2)
    large_dim: int = 5  # from this ambient dimension on, q is capped by large_dim_max_q
    large_dim_max_q: int = Field(default_factory=lambda: os.getenv("QG_FQ_LARGE_DIM_MAX_Q", "3"), ge=2)


class AppConfig(BaseModel):
    # env values arrive as strings; validate_default coerces them and reports bad ones
    model_config = ConfigDict(validate_default=True)

    oracle: OracleConfig = Field(default_factory=OracleConfig)
    max_rank: int = Field(default_factory=lambda: os.getenv("QG_MAX_RANK", "12"), ge=0)
    jobs: int = Field(default_factory=lambda: os.getenv("QG_JOBS", "1"), ge=1)
    output_format: Literal["json", "plain", "csv"] = Field(default_factory=lambda: os.getenv("QG_FORMAT", "plain"))
    cluster_bound: int = Field(default_factory=lambda: os.getenv("QG_CLUSTER_BOUND", "20"), ge=1)
    debug: bool = Field(default_factory=lambda: os.getenv("QG_DEBUG", "false"))
    log_file: Optional[str] = Field(default_factory=lambda: os.getenv("QG_LOG_FILE") or None)


@lru_cache(maxsize=1)
def get_config() -> AppConfig:
    """Process-wide configuration, read from the environment on first use."""
    return AppConfig()
