"""Configuration management for idem2."""
from decouple import config

DEFAULT_BUDGET = 10**8
DEFAULT_MAX_MODULUS = 2**63 - 1


class Settings:
    """Library settings loaded from environment variables."""

    # Largest candidate space the oracle / enumerator may walk
    BUDGET: int = config("IDEM2_BUDGET", default=DEFAULT_BUDGET, cast=int)

    # Largest modulus accepted by factorize (trial division)
    MAX_MODULUS: int = config("IDEM2_MAX_MODULUS", default=DEFAULT_MAX_MODULUS, cast=int)

    # Worker processes for selftest grid cells
    JOBS: int = config("IDEM2_JOBS", default=1, cast=int)

    # Candidates per vectorized oracle batch
    ORACLE_CHUNK: int = config("IDEM2_ORACLE_CHUNK", default=1 << 18, cast=int)

    LOG_LEVEL: str = config("IDEM2_LOG_LEVEL", default="WARNING")


settings = Settings()
