"""
Embedded reference fixtures

Loads the scenario table from `reference_scenarios.yaml` (or the file named by
settings.FIXTURES_PATH) into Fixture models.
"""

from pathlib import Path
from typing import Any, Dict, List

import yaml

from app.core.config import settings
from app.core.exceptions import ElectionError
from app.schemas.analysis import ParadoxKind
from app.schemas.election import Profile, VotingRule, WinningSet
from app.schemas.fixture import Fixture

FIXTURES_FILE = Path(__file__).with_name("reference_scenarios.yaml")


def _to_fixture(entry: Dict[str, Any]) -> Fixture:
    labels = list(entry["alts"])
    tie = entry.get("tie")
    profile = Profile.from_labels(
        labels,
        [ranking.split(">") for ranking in entry["voters"]],
        VotingRule(entry["rule"]),
        tie_order=tie.split(">") if tie else None,
    )
    return Fixture(
        name=entry["name"],
        source=entry["source"],
        profile=profile,
        expected_outcome=WinningSet(
            winners=frozenset(profile.index_of(label) for label in entry["expected_winners"])
        ),
        expected_flags={
            ParadoxKind(kind): bool(value)
            for kind, value in (entry.get("expected_flags") or {}).items()
        },
    )


def get_fixtures() -> List[Fixture]:
    """Return the reference fixtures in file order."""
    path = Path(settings.FIXTURES_PATH) if settings.FIXTURES_PATH else FIXTURES_FILE
    try:
        with open(path, encoding="utf-8") as f:
            entries = yaml.safe_load(f) or []
    except (OSError, UnicodeDecodeError, yaml.YAMLError) as e:
        raise ElectionError(f"cannot load fixtures from {path}: {e}")
    if not isinstance(entries, list):
        raise ElectionError(f"{path}: expected a list of scenarios")

    fixtures = []
    for position, entry in enumerate(entries, start=1):
        try:
            fixtures.append(_to_fixture(entry))
        except (KeyError, AttributeError, TypeError, ValueError) as e:
            name = entry.get("name", position) if isinstance(entry, dict) else position
            raise ElectionError(f"{path}: bad scenario {name}: {e!r}")
    return fixtures
