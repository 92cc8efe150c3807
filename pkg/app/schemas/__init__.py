from .election import (
    AlternativeId,
    Ballot,
    PreferenceOrder,
    Profile,
    TallyState,
    TieKind,
    TieRule,
    VotingRule,
    WinningSet,
    VOTING_SYSTEMS,
)
from .solve import SolveResult, SolveStats
from .analysis import ParadoxFlags, ParadoxKind, ParadoxReport
from .search import AbsenceCertificate, SearchHit, SearchOutcome, SearchSpec
from .fixture import Fixture, FixtureCheck, FixtureSuiteResult, ProfileDocument
