import os
import random

import pytest

from app.core.config import settings as app_settings
from app.core.exceptions import FeasibilityError
from app.schemas.analysis import ParadoxKind
from app.schemas.election import TieKind, VotingRule, WinningSet
from app.schemas.search import SearchSpec
from app.services.analyzer import paradox_analyzer
from app.services.search import profile_searcher
from app.services.solver import spe_solver
from conftest import canonical_specs

PLURALITY, APPROVAL = VotingRule.PLURALITY, VotingRule.APPROVAL
DETERMINISTIC, UNIFORM = TieKind.DETERMINISTIC, TieKind.UNIFORM


def spec(n, m, rule=PLURALITY, tie=UNIFORM, paradox=ParadoxKind.PARETO_WEAK, **extra):
    return SearchSpec(n=n, m=m, rule=rule, tie=tie, paradox=paradox, **extra)


def test_enumeration_sizes():
    assert profile_searcher.count_profiles(spec(2, 3, canonical=False)) == 36
    assert len(list(profile_searcher.enumerate_profiles(spec(2, 3, canonical=False)))) == 36
    assert len(list(profile_searcher.enumerate_profiles(spec(3, 3)))) == 36
    assert len(list(profile_searcher.enumerate_profiles(spec(5, 2)))) == 16
    assert profile_searcher.count_profiles(spec(2, 3, tie=DETERMINISTIC)) == 36
    assert profile_searcher.count_profiles(spec(2, 3, tie=DETERMINISTIC, canonical=False)) == 216


def test_enumeration_order_advances_last_voter_fastest():
    profiles = list(profile_searcher.enumerate_profiles(spec(2, 3, canonical=False)))
    assert [v.ranking for v in profiles[0].voters] == [(0, 1, 2), (0, 1, 2)]
    assert [v.ranking for v in profiles[1].voters] == [(0, 1, 2), (0, 2, 1)]
    assert [v.ranking for v in profiles[6].voters] == [(0, 2, 1), (0, 1, 2)]
    assert len(set(profiles)) == 36


def test_canonical_spaces_pin_the_right_order():
    for profile in profile_searcher.enumerate_profiles(spec(3, 3)):
        assert profile.voters[0].ranking == (0, 1, 2)
    for profile in profile_searcher.enumerate_profiles(spec(2, 3, tie=DETERMINISTIC)):
        assert profile.tie.order.ranking == (0, 1, 2)


def test_finds_the_two_voter_pareto_paradox():
    outcome = profile_searcher.find_paradoxes(spec(2, 3, tie=DETERMINISTIC, limit=1))
    assert len(outcome.hits) == 1
    hit = outcome.hits[0]
    assert hit.report.flags.pareto_weak
    assert hit.outcome == spe_solver.spe_outcome(hit.profile)


def test_no_pareto_paradox_for_two_approval_voters():
    outcome = profile_searcher.find_paradoxes(spec(2, 3, rule=APPROVAL))
    assert outcome.hits == ()
    assert outcome.exhausted
    assert outcome.profiles_scanned == 6


def test_no_condorcet_paradox_with_two_alternatives():
    outcome = profile_searcher.find_paradoxes(spec(3, 2, paradox=ParadoxKind.CONDORCET_WINNER))
    assert outcome.hits == ()
    assert outcome.exhausted


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("rule,tie", [(APPROVAL, DETERMINISTIC), (APPROVAL, UNIFORM), (PLURALITY, UNIFORM)])
def test_pareto_weak_paradox_absent_with_three_alternatives(n, rule, tie):
    certificate = profile_searcher.verify_absence(spec(n, 3, rule=rule, tie=tie))
    assert certificate.absent
    assert certificate.profiles_scanned == profile_searcher.count_profiles(spec(n, 3, rule=rule, tie=tie))


def test_pareto_weak_paradox_present_for_plurality_deterministic():
    certificate = profile_searcher.verify_absence(spec(2, 3, tie=DETERMINISTIC))
    assert not certificate.absent


def test_every_hit_replays():
    outcome = profile_searcher.find_paradoxes(spec(2, 3, tie=DETERMINISTIC, canonical=False))
    assert outcome.hits
    for hit in outcome.hits:
        outcome_again = spe_solver.spe_outcome(hit.profile)
        assert outcome_again == hit.outcome
        assert paradox_analyzer.classify_paradoxes(hit.profile, outcome_again) == hit.report
        assert hit.report.flags.pareto_weak


def test_relabeling_preserves_paradoxes():
    rng = random.Random(2024)
    outcome = profile_searcher.find_paradoxes(spec(2, 3, tie=DETERMINISTIC, canonical=False))
    for hit in outcome.hits:
        permutation = list(range(3))
        rng.shuffle(permutation)
        relabeled = profile_searcher.relabel(hit.profile, permutation)
        moved = spe_solver.spe_outcome(relabeled)
        assert moved == WinningSet(winners={permutation[a] for a in hit.outcome.winners})
        assert paradox_analyzer.classify_paradoxes(relabeled, moved).flags == hit.report.flags

        canonical = profile_searcher.canonicalize(hit.profile)
        assert canonical.tie.order.ranking == (0, 1, 2)
        report = paradox_analyzer.classify_paradoxes(canonical, spe_solver.spe_outcome(canonical))
        assert report.flags.pareto_weak


def test_uniform_canonical_form_pins_first_voter():
    profile = profile_searcher.profile_at(spec(3, 3, canonical=False), 100)
    canonical = profile_searcher.canonicalize(profile)
    assert canonical.voters[0].ranking == (0, 1, 2)
    assert canonical in set(profile_searcher.enumerate_profiles(spec(3, 3)))


def test_results_do_not_depend_on_worker_count(monkeypatch):
    monkeypatch.setattr(app_settings, "SEARCH_SHARD_SIZE", 5)
    full = spec(2, 3, tie=DETERMINISTIC, canonical=False)
    sequential = profile_searcher.find_paradoxes(full, workers=1)
    parallel = profile_searcher.find_paradoxes(full, workers=2)
    assert parallel == sequential

    limited = full.model_copy(update={"limit": 3})
    first = profile_searcher.find_paradoxes(limited, workers=1)
    assert profile_searcher.find_paradoxes(limited, workers=3) == first
    assert [h.index for h in first.hits] == [h.index for h in sequential.hits[:3]]
    assert first.profiles_scanned == first.hits[-1].index + 1
    assert not first.exhausted


def test_large_search_without_limit_is_refused():
    with pytest.raises(FeasibilityError):
        profile_searcher.find_paradoxes(spec(10, 4, rule=APPROVAL))


def test_tie_order_can_be_pinned():
    pinned = spec(2, 3, tie=DETERMINISTIC, tie_order=(2, 1, 0), canonical=False)
    assert profile_searcher.count_profiles(pinned) == 36
    assert all(p.tie.order.ranking == (2, 1, 0) for p in profile_searcher.enumerate_profiles(pinned))


def test_hunt_stops_at_first_voter_count_with_a_hit():
    outcome = profile_searcher.hunt(spec(1, 3, tie=DETERMINISTIC), max_voters=3)
    assert outcome.hits
    assert outcome.hits[0].profile.n == 2


WORKERS = os.cpu_count() or 1


@pytest.mark.slow
@pytest.mark.parametrize("rule,tie", [(PLURALITY, DETERMINISTIC), (PLURALITY, UNIFORM),
                                      (APPROVAL, DETERMINISTIC), (APPROVAL, UNIFORM)])
def test_condorcet_winner_paradox_found_with_three_alternatives(rule, tie):
    template = spec(1, 3, rule=rule, tie=tie, paradox=ParadoxKind.CONDORCET_WINNER, limit=1)
    outcome = profile_searcher.hunt(template, max_voters=5, workers=WORKERS)
    assert len(outcome.hits) == 1
    assert outcome.hits[0].report.flags.condorcet_winner_paradox


@pytest.mark.slow
@pytest.mark.parametrize("rule,tie,n", [(PLURALITY, DETERMINISTIC, 6), (PLURALITY, UNIFORM, 7),
                                        (APPROVAL, DETERMINISTIC, 6), (APPROVAL, UNIFORM, 7)])
def test_condorcet_loser_paradox_found_with_three_alternatives(rule, tie, n):
    target = spec(n, 3, rule=rule, tie=tie, paradox=ParadoxKind.CONDORCET_LOSER, limit=1)
    outcome = profile_searcher.find_paradoxes(target, workers=WORKERS)
    assert len(outcome.hits) == 1
    assert outcome.hits[0].report.flags.condorcet_loser_paradox
