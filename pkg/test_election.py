from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from app.core.exceptions import (
    ElectionError,
    EmptySubsetError,
    IllegalBallotError,
    TerminalStateError,
)
from app.schemas.election import Ballot, PreferenceOrder, TallyState, TieRule, VotingRule
from app.services.election import (
    Comparison,
    election_model,
    lifted_key,
    mask_of,
    utility_table,
)
from conftest import make_profile
from profile_strategies import preference_orders

A, B, C, D = 0, 1, 2, 3
ABC = PreferenceOrder(ranking=(A, B, C))


def nonempty_subsets(m):
    return [frozenset(c) for size in range(1, m + 1) for c in combinations(range(m), size)]


def test_top_returns_earliest_ranked_member():
    assert election_model.top(ABC, {B, C}) == B
    assert election_model.top(ABC, {A, B, C}) == A
    assert election_model.top(PreferenceOrder(ranking=(C, B, A)), {A, B}) == B


def test_top_rejects_empty_subset():
    with pytest.raises(EmptySubsetError, match="empty subset"):
        election_model.top(ABC, set())


def test_lifted_compare_examples():
    assert election_model.lifted_compare(ABC, {A}, {B}) == Comparison.GREATER
    assert election_model.lifted_compare(ABC, {A}, {A, B}) == Comparison.GREATER
    assert election_model.lifted_compare(ABC, {A, C}, {A, B}) == Comparison.LESS
    assert election_model.lifted_compare(ABC, {A, B, C}, {A, B, C}) == Comparison.EQUAL


def test_lifted_compare_rejects_empty_sets():
    with pytest.raises(EmptySubsetError):
        election_model.lifted_compare(ABC, set(), {A})


@settings(max_examples=20, deadline=None)
@given(preference_orders(4))
def test_lifted_order_is_a_strict_total_order(order):
    subsets = nonempty_subsets(4)
    assert len(subsets) == 15
    cmp = {
        (s, t): election_model.lifted_compare(order, s, t) for s in subsets for t in subsets
    }
    for s in subsets:
        for t in subsets:
            if s == t:
                assert cmp[s, t] == Comparison.EQUAL
            else:
                assert cmp[s, t] != Comparison.EQUAL
                assert cmp[s, t] == -cmp[t, s]
    for s in subsets:
        for t in subsets:
            for u in subsets:
                if cmp[s, t] == Comparison.GREATER and cmp[t, u] == Comparison.GREATER:
                    assert cmp[s, u] == Comparison.GREATER


@settings(max_examples=20, deadline=None)
@given(preference_orders(4))
def test_singleton_comparison_follows_base_order(order):
    for x in range(4):
        for y in range(4):
            if x != y:
                expected = Comparison.GREATER if order.prefers(x, y) else Comparison.LESS
                assert election_model.lifted_compare(order, {x}, {y}) == expected


@settings(max_examples=20, deadline=None)
@given(preference_orders(4))
def test_adding_a_worse_alternative_makes_the_set_worse(order):
    for s in nonempty_subsets(4):
        for x in set(range(4)) - s:
            if election_model.top(order, s) == election_model.top(order, s | {x}):
                assert election_model.lifted_compare(order, s, s | {x}) == Comparison.GREATER


@settings(max_examples=20, deadline=None)
@given(preference_orders(4))
def test_utility_table_agrees_with_lifted_compare(order):
    utility = utility_table(order.ranking)
    for s in nonempty_subsets(4):
        for t in nonempty_subsets(4):
            expected = election_model.lifted_compare(order, s, t)
            actual = utility[mask_of(s)] - utility[mask_of(t)]
            assert (actual > 0) - (actual < 0) == expected
            key_order = lifted_key(order.positions, mask_of(t)) > lifted_key(order.positions, mask_of(s))
            assert key_order == (expected == Comparison.GREATER)


def test_legal_ballots_in_canonical_order():
    plurality = election_model.legal_ballots(VotingRule.PLURALITY, 3)
    assert [b.approved for b in plurality] == [frozenset(), {A}, {B}, {C}]

    approval = election_model.legal_ballots(VotingRule.APPROVAL, 2)
    assert [b.approved for b in approval] == [frozenset(), {A}, {B}, {A, B}]

    assert len(election_model.legal_ballots(VotingRule.APPROVAL, 4)) == 16


def test_approval_ballots_sorted_by_size_then_members():
    ballots = election_model.legal_ballots(VotingRule.APPROVAL, 3)
    keys = [(len(b.approved), sorted(b.approved)) for b in ballots]
    assert keys == sorted(keys)
    assert ballots[-1].approved == {A, B, C}


def test_apply_ballot_examples():
    plurality = make_profile(["A>B>C"] * 4)
    state = election_model.apply_ballot(
        TallyState(counts=(0, 0, 0), next=0), Ballot(approved={B}), plurality
    )
    assert state == TallyState(counts=(0, 1, 0), next=1)

    before = TallyState(counts=(2, 1, 0), next=3)
    after = election_model.apply_ballot(before, Ballot(), plurality)
    assert after == TallyState(counts=(2, 1, 0), next=4)
    assert before == TallyState(counts=(2, 1, 0), next=3)

    approval = make_profile(["A>B>C"] * 4, rule=VotingRule.APPROVAL)
    state = election_model.apply_ballot(
        TallyState(counts=(1, 1, 0), next=2), Ballot(approved={A, C}), approval
    )
    assert state == TallyState(counts=(2, 1, 1), next=3)


def test_apply_ballot_rejects_terminal_state_and_illegal_ballots():
    profile = make_profile(["A>B>C", "B>A>C"])
    with pytest.raises(TerminalStateError):
        election_model.apply_ballot(TallyState(counts=(1, 1, 0), next=2), Ballot(approved={A}), profile)
    with pytest.raises(IllegalBallotError):
        election_model.apply_ballot(TallyState.zero(3), Ballot(approved={A, B}), profile)
    with pytest.raises(IllegalBallotError):
        election_model.apply_ballot(TallyState.zero(3), Ballot(approved={7}), profile)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=6))
def test_plurality_tallies_stay_within_bounds(choices):
    profile = make_profile(["A>B>C>D"] * len(choices))
    state = TallyState.zero(4)
    for choice in choices:
        state = election_model.apply_ballot(state, Ballot(approved={choice}), profile)
        assert sum(state.counts) <= state.next
    assert state.next == profile.n


def test_winning_set_examples():
    uniform = TieRule.uniform()
    cba = TieRule.deterministic((C, B, A))
    assert election_model.winning_set((2, 3, 0), uniform).winners == {B}
    assert election_model.winning_set((2, 2, 1), cba).winners == {B}
    assert election_model.winning_set((0, 0, 0), uniform).winners == {A, B, C}
    assert election_model.winning_set((0, 0, 0), cba).winners == {C}


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=5), st.data())
def test_winning_set_shapes(counts, data):
    m = len(counts)
    argmax = {a for a, c in enumerate(counts) if c == max(counts)}
    assert election_model.winning_set(counts, TieRule.uniform()).winners == argmax

    tie_order = data.draw(st.permutations(range(m)))
    winners = election_model.winning_set(counts, TieRule.deterministic(tie_order)).winners
    assert len(winners) == 1
    assert winners <= argmax


def test_winning_set_rejects_short_tie_order():
    with pytest.raises(ElectionError, match="tie order"):
        election_model.winning_set((1, 1, 1, 1), TieRule.deterministic((A, B, C)))


def test_tally_cannot_exceed_ballots_cast():
    with pytest.raises(ValidationError):
        TallyState(counts=(5, 0, 0), next=0)
    # Approval lets every count reach the number of ballots cast.
    assert TallyState(counts=(2, 2, 2), next=2).next == 2


def test_plurality_tally_total_is_bounded_by_ballots_cast():
    profile = make_profile(["A>B>C"] * 4)
    with pytest.raises(ElectionError, match="more votes than ballots"):
        election_model.apply_ballot(TallyState(counts=(1, 1, 0), next=1), Ballot(approved={A}), profile)
    approval = make_profile(["A>B>C"] * 4, rule=VotingRule.APPROVAL)
    state = election_model.apply_ballot(TallyState(counts=(1, 1, 0), next=1), Ballot(approved={A}), approval)
    assert state == TallyState(counts=(2, 1, 0), next=2)
