from typing import Tuple
from pydantic import BaseModel, ConfigDict

from app.schemas.election import Ballot, WinningSet


class SolveStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    states_visited: int = 0
    memo_hits: int = 0


class SolveResult(BaseModel):
    """Equilibrium outcome plus the canonical equilibrium ballot sequence."""
    model_config = ConfigDict(frozen=True)

    outcome: WinningSet
    path: Tuple[Ballot, ...]
    stats: SolveStats
