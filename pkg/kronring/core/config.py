"""
Configuration Management

This module manages all application configuration from environment variables.
"""

from typing import List, Union

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    # Application
    APP_NAME: str = "kronring"
    VERSION: str = "0.1.0"

    # Logging Configuration
    LOG_LEVEL: str = "WARNING"

    # Arithmetic defaults
    DEFAULT_STRATEGY: str = "regular"
    DEFAULT_OUTPUT: str = "plain"
    DEFAULT_SEED: int = 42

    # Powers of the generator: below POWER_ITERATION_LIMIT * n the coordinates of
    # xi^k come from iterated companion steps, above it from square-and-multiply
    POWER_ITERATION_LIMIT: int = 4

    # Largest exponent accepted in polynomial text; terms are stored densely
    MAX_PARSE_DEGREE: int = 100000

    # Verification suite sizes (CLI `check`)
    CHECK_MAX_DEGREE: int = 12
    CHECK_MODULI_PER_DEGREE: int = 10
    CHECK_PAIRS_PER_MODULUS: int = 5

    # Benchmark Configuration
    BENCH_RING: str = "mod:2305843009213693951"  # 2^61 - 1
    BENCH_DEGREES: Union[List[int], str] = "4,16,64,256"
    BENCH_REPS: int = 3

    # Test-only: flips the sign of -a_0 in companion_of
    INJECT_COMPANION_FAULT: bool = False

    @field_validator("BENCH_DEGREES", mode="before")
    @classmethod
    def parse_degrees(cls, v):
        """Parse BENCH_DEGREES from comma-separated string or list"""
        if isinstance(v, str):
            return [int(d.strip()) for d in v.split(",") if d.strip()]
        return v

    @field_validator("DEFAULT_STRATEGY")
    @classmethod
    def check_strategy(cls, v: str) -> str:
        """Strategy names are matched case-insensitively"""
        return v.lower()

    class Config:
        env_prefix = "KRONRING_"
        env_file = ".env"
        env_file_encoding = "utf-8"


# Create settings instance
settings = Settings()
