"""
Election Model Service

Pure operations of the election domain: favourites within a subset, the
lifted order on subsets, legal ballots, tallies and winning sets.

Subsets are handled as bitmasks internally (bit a set = alternative a
present); the public methods accept any iterable of indices.
"""

from enum import IntEnum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from app.core.exceptions import (
    ElectionError,
    EmptySubsetError,
    IllegalBallotError,
    TerminalStateError,
)
from app.schemas.election import (
    Ballot,
    PreferenceOrder,
    Profile,
    TallyState,
    TieKind,
    TieRule,
    VotingRule,
    WinningSet,
)


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for alt in indices:
        mask |= 1 << alt
    return mask


def members(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@lru_cache(maxsize=64)
def ballot_masks(rule: VotingRule, m: int) -> Tuple[int, ...]:
    """Legal ballots as masks, ordered by size then lexicographically."""
    largest = 1 if rule == VotingRule.PLURALITY else m
    return tuple(
        mask_of(combo)
        for size in range(largest + 1)
        for combo in combinations(range(m), size)
    )


def lifted_key(positions: Sequence[int], mask: int) -> Tuple[int, int, Tuple[int, ...]]:
    """Sort key of a nonempty subset; smaller keys are preferred.

    Favourite first, then the smaller set, then the remaining members
    compared favourite-first. Equal-size sets with equal favourites reduce
    to a lexicographic comparison of their sorted ranks.
    """
    ranks = tuple(sorted(positions[a] for a in members(mask)))
    return ranks[0], len(ranks), ranks


@lru_cache(maxsize=4096)
def utility_table(ranking: Tuple[int, ...]) -> Tuple[int, ...]:
    """utility[mask] for every nonempty subset; higher is better, all distinct."""
    positions = PreferenceOrder(ranking=ranking).positions
    m = len(ranking)
    ordered = sorted(range(1, 1 << m), key=lambda mask: lifted_key(positions, mask))
    table = [-1] * (1 << m)
    worst_first = reversed(ordered)
    for utility, mask in enumerate(worst_first):
        table[mask] = utility
    return tuple(table)


def winner_mask(counts: Sequence[int], tie_positions: Sequence[int] = ()) -> int:
    """Mask of the winning set; a tie order (by position) reduces it to one winner."""
    best = max(counts)
    tied = [a for a, c in enumerate(counts) if c == best]
    if tie_positions:
        return 1 << min(tied, key=tie_positions.__getitem__)
    return mask_of(tied)


class ElectionModel:
    """Core operations on profiles, ballots and tallies."""

    def top(self, order: PreferenceOrder, subset: Iterable[int]) -> int:
        """The member of the subset ranked highest by the order."""
        chosen = set(subset)
        if not chosen:
            raise EmptySubsetError()
        for alt in order.ranking:
            if alt in chosen:
                return alt
        raise ElectionError("subset contains alternatives the order does not rank")

    def lifted_compare(
        self, order: PreferenceOrder, first: Iterable[int], second: Iterable[int]
    ) -> Comparison:
        """Compare two nonempty subsets; GREATER means the first is preferred."""
        s1, s2 = frozenset(first), frozenset(second)
        if not s1 or not s2:
            raise EmptySubsetError()
        while True:
            t1, t2 = self.top(order, s1), self.top(order, s2)
            if t1 != t2:
                return Comparison.GREATER if order.prefers(t1, t2) else Comparison.LESS
            if len(s1) != len(s2):
                return Comparison.GREATER if len(s1) < len(s2) else Comparison.LESS
            s1, s2 = s1 - {t1}, s2 - {t1}
            if not s1:
                return Comparison.EQUAL

    def legal_ballots(self, rule: VotingRule, m: int) -> List[Ballot]:
        if m < 1:
            raise ElectionError("at least one alternative is required")
        return [Ballot.from_mask(mask) for mask in ballot_masks(rule, m)]

    def check_ballot(self, ballot: Ballot, rule: VotingRule, m: int) -> None:
        if any(alt < 0 or alt >= m for alt in ballot.approved):
            raise IllegalBallotError("ballot names an unknown alternative")
        if rule == VotingRule.PLURALITY and len(ballot.approved) > 1:
            raise IllegalBallotError("a plurality ballot approves at most one alternative")

    def apply_ballot(self, state: TallyState, ballot: Ballot, profile: Profile) -> TallyState:
        """Tally after the next voter casts the ballot; the input state is untouched."""
        if state.next >= profile.n:
            raise TerminalStateError("every voter has already cast a ballot")
        if len(state.counts) != profile.m:
            raise ElectionError("tally does not match the profile's alternatives")
        if profile.rule == VotingRule.PLURALITY and sum(state.counts) > state.next:
            raise ElectionError("plurality tally has more votes than ballots cast")
        self.check_ballot(ballot, profile.rule, profile.m)
        counts = tuple(
            c + 1 if alt in ballot.approved else c for alt, c in enumerate(state.counts)
        )
        return TallyState(counts=counts, next=state.next + 1)

    def winning_set(self, counts: Sequence[int], tie: TieRule) -> WinningSet:
        if not counts:
            raise ElectionError("at least one alternative is required")
        positions = tie.order.positions if tie.kind == TieKind.DETERMINISTIC else ()
        if positions and len(positions) != len(counts):
            raise ElectionError(
                f"tie order ranks {len(positions)} alternatives, tally has {len(counts)}"
            )
        return WinningSet.from_mask(winner_mask(counts, positions))


# Singleton instance
election_model = ElectionModel()
