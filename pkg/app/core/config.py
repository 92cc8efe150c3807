from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    PROJECT_NAME: str = "Sequential Voting Solver"
    LOG_LEVEL: str = "WARNING"

    # Solver
    SOLVER_MEMOIZE: bool = True
    NAIVE_TREE_LIMIT: int = 10_000_000  # max branching**n for the history oracle

    # Search
    SEARCH_WORKERS: int = 1
    SEARCH_SHARD_SIZE: int = 256
    SEARCH_WORK_LIMIT: int = 2_000_000_000  # profiles * state bound * branching

    # Reporting
    DEFAULT_REPORT_FORMAT: str = "text"  # Options: text, json
    FIXTURES_PATH: Optional[str] = None

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

settings = Settings()
