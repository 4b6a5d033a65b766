"""
Runtime settings read from the environment (``.env`` is loaded by the CLI).

    SPINNET_ORACLE_BUDGET   elementary-term cap for the brute-force oracle
    SPINNET_THREADS         default worker count for outer sums
    SPINNET_DEBUG           any value turns on debug logging
"""
import os

from pydantic import BaseModel, Field

DEFAULT_ORACLE_BUDGET = 10**8


class Settings(BaseModel):
    oracle_budget: int = Field(default=DEFAULT_ORACLE_BUDGET, gt=0)
    threads: int = Field(default=1, ge=1)
    debug: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            oracle_budget=int(os.getenv("SPINNET_ORACLE_BUDGET", DEFAULT_ORACLE_BUDGET)),
            threads=int(os.getenv("SPINNET_THREADS", "1")),
            debug=bool(os.getenv("SPINNET_DEBUG")),
        )
