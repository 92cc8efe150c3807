from typing import Dict, Optional, Sequence

import pytest

from app.data.fixtures import get_fixtures
from app.schemas.election import VOTING_SYSTEMS, Profile, VotingRule
from app.schemas.fixture import Fixture
from app.schemas.search import SearchSpec


def make_profile(
    rankings: Sequence[str],
    rule: VotingRule = VotingRule.PLURALITY,
    tie: Optional[str] = None,
) -> Profile:
    """Profile over A, B, C, ... from rankings written as 'C>A>B'."""
    parsed = [r.split(">") for r in rankings]
    labels = sorted(parsed[0])
    return Profile.from_labels(labels, parsed, rule, tie_order=tie.split(">") if tie else None)


def canonical_specs(m: int, n: int, **extra):
    """One canonical search spec per voting system."""
    for rule, tie in VOTING_SYSTEMS:
        yield SearchSpec(n=n, m=m, rule=rule, tie=tie, **extra)


@pytest.fixture(scope="session")
def fixtures_by_name() -> Dict[str, Fixture]:
    return {f.name: f for f in get_fixtures()}


@pytest.fixture
def table1(fixtures_by_name) -> Profile:
    return fixtures_by_name["T1"].profile
