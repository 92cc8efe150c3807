"""
Analysis Schemas

Paradox classification results.
"""

from enum import Enum
from typing import FrozenSet, Optional, Tuple
from pydantic import BaseModel, ConfigDict, model_validator


class ParadoxKind(str, Enum):
    CONDORCET_WINNER = "condorcet_winner"
    CONDORCET_LOSER = "condorcet_loser"
    PARETO_WEAK = "pareto_weak"
    PARETO_STRONG = "pareto_strong"


class ParadoxFlags(BaseModel):
    model_config = ConfigDict(frozen=True)

    condorcet_winner_paradox: bool = False
    condorcet_loser_paradox: bool = False
    pareto_weak: bool = False
    pareto_strong: bool = False

    @model_validator(mode="after")
    def _strong_implies_weak(self) -> "ParadoxFlags":
        if self.pareto_strong and not self.pareto_weak:
            raise ValueError("pareto_strong implies pareto_weak")
        return self

    def get(self, kind: ParadoxKind) -> bool:
        return {
            ParadoxKind.CONDORCET_WINNER: self.condorcet_winner_paradox,
            ParadoxKind.CONDORCET_LOSER: self.condorcet_loser_paradox,
            ParadoxKind.PARETO_WEAK: self.pareto_weak,
            ParadoxKind.PARETO_STRONG: self.pareto_strong,
        }[kind]

    @staticmethod
    def field_for(kind: ParadoxKind) -> str:
        return {
            ParadoxKind.CONDORCET_WINNER: "condorcet_winner_paradox",
            ParadoxKind.CONDORCET_LOSER: "condorcet_loser_paradox",
            ParadoxKind.PARETO_WEAK: "pareto_weak",
            ParadoxKind.PARETO_STRONG: "pareto_strong",
        }[kind]


class ParadoxReport(BaseModel):
    """Majority structure of a profile and the paradoxes its outcome exhibits."""
    model_config = ConfigDict(frozen=True)

    condorcet_winner: Optional[int] = None
    condorcet_loser: Optional[int] = None
    pareto_pairs: FrozenSet[Tuple[int, int]] = frozenset()  # (dominator, dominated)
    flags: ParadoxFlags = ParadoxFlags()
