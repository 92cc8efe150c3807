"""
Fixture Schemas
"""

from typing import Dict, List, Optional
from pydantic import BaseModel, ConfigDict, Field

from app.schemas.analysis import ParadoxKind
from app.schemas.election import Profile, WinningSet


class ProfileDocument(BaseModel):
    """Text form of a profile and where it came from."""
    model_config = ConfigDict(frozen=True)

    text: str
    source: Optional[str] = None


class Fixture(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    source: str
    profile: Profile
    expected_outcome: WinningSet
    expected_flags: Dict[ParadoxKind, bool] = Field(default_factory=dict)


class FixtureCheck(BaseModel):
    name: str
    source: str
    passed: bool
    expected_winners: List[str]
    actual_winners: List[str]
    mismatches: List[str] = Field(default_factory=list)


class FixtureSuiteResult(BaseModel):
    checks: List[FixtureCheck]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def ok(self) -> bool:
        return self.passed == self.total
