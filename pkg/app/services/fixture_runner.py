"""
Fixture Runner Service

Solves every embedded reference scenario and compares the equilibrium
outcome and the stated paradox flags with the recorded expectations.
"""

from typing import List, Optional

from app.core.logging import get_logger
from app.data.fixtures import get_fixtures
from app.schemas.analysis import ParadoxFlags
from app.schemas.fixture import Fixture, FixtureCheck, FixtureSuiteResult
from app.services.analyzer import paradox_analyzer
from app.services.solver import spe_solver

logger = get_logger(__name__)


class FixtureRunner:

    def check_fixture(self, fixture: Fixture) -> FixtureCheck:
        profile = fixture.profile
        outcome = spe_solver.spe_outcome(profile)
        report = paradox_analyzer.classify_paradoxes(profile, outcome)

        mismatches: List[str] = []
        if outcome != fixture.expected_outcome:
            mismatches.append(
                f"outcome: expected {profile.format_set(fixture.expected_outcome.winners)}, "
                f"got {profile.format_set(outcome.winners)}"
            )
        for kind, expected in fixture.expected_flags.items():
            actual = report.flags.get(kind)
            if actual != expected:
                mismatches.append(
                    f"{ParadoxFlags.field_for(kind)}: expected {expected}, got {actual}"
                )

        return FixtureCheck(
            name=fixture.name,
            source=fixture.source,
            passed=not mismatches,
            expected_winners=[profile.label_of(a) for a in sorted(fixture.expected_outcome.winners)],
            actual_winners=[profile.label_of(a) for a in sorted(outcome.winners)],
            mismatches=mismatches,
        )

    def run_fixtures(self, fixtures: Optional[List[Fixture]] = None) -> FixtureSuiteResult:
        fixtures = get_fixtures() if fixtures is None else fixtures
        checks = [self.check_fixture(f) for f in fixtures]
        for check in checks:
            if not check.passed:
                logger.warning("fixture %s failed: %s", check.name, "; ".join(check.mismatches))
        return FixtureSuiteResult(checks=checks)


# Singleton instance
fixture_runner = FixtureRunner()
