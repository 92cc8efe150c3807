"""
Search Schemas

Pydantic models for profile-space searches and absence certificates.
"""

from typing import Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.schemas.analysis import ParadoxKind, ParadoxReport
from app.schemas.election import Profile, TieKind, VotingRule, WinningSet


class SearchSpec(BaseModel):
    """What to scan: n voters over m alternatives under one voting system."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    rule: VotingRule
    tie: TieKind
    paradox: ParadoxKind = ParadoxKind.CONDORCET_WINNER
    limit: Optional[int] = Field(default=None, ge=1)
    canonical: bool = True
    tie_order: Optional[Tuple[int, ...]] = None  # pins the tie order when given

    @field_validator("tie_order")
    @classmethod
    def _is_permutation(cls, value: Optional[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
        if value is not None and sorted(value) != list(range(len(value))):
            raise ValueError("tie order must list every alternative exactly once")
        return value

    @model_validator(mode="after")
    def _tie_order_fits(self) -> "SearchSpec":
        if self.tie_order is not None:
            if self.tie != TieKind.DETERMINISTIC:
                raise ValueError("a tie order only applies to deterministic tie-breaking")
            if len(self.tie_order) != self.m:
                raise ValueError(f"tie order must rank all {self.m} alternatives")
        return self


class SearchHit(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int  # position in the enumeration stream
    profile: Profile
    outcome: WinningSet
    report: ParadoxReport


class SearchOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    hits: Tuple[SearchHit, ...] = ()
    exhausted: bool = False
    profiles_scanned: int = 0


class AbsenceCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    absent: bool
    profiles_scanned: int
