"""
Sequential Election Solver Service

Computes the subgame-perfect equilibrium outcome of a sequential election
by backward induction. The continuation game after any history depends only
on the current vote counts and on who moves next, so the memo table is keyed
on (next voter, packed counts) instead of on ballot histories.
"""

from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import FeasibilityError
from app.core.logging import get_logger
from app.schemas.election import Ballot, Profile, TallyState, TieKind, VotingRule, WinningSet
from app.schemas.solve import SolveResult, SolveStats
from app.services.election import ballot_masks, election_model, utility_table, winner_mask

logger = get_logger(__name__)


@lru_cache(maxsize=256)
def _moves(rule: VotingRule, m: int, width: int) -> Tuple[Tuple[int, int], ...]:
    """(ballot mask, packed increment) pairs in canonical ballot order."""
    moves = []
    for mask in ballot_masks(rule, m):
        delta = 0
        for alt in range(m):
            if mask >> alt & 1:
                delta += 1 << (width * alt)
        moves.append((mask, delta))
    return tuple(moves)


def state_bound(n: int, m: int) -> int:
    """Upper bound on distinct tally states over all levels of the game."""
    return sum((i + 1) ** m for i in range(n + 1))


class GameTree:
    """Backward induction for a single profile; the memo table is private."""

    def __init__(self, profile: Profile, memoize: bool = True):
        self.profile = profile
        self.n = profile.n
        self.m = profile.m
        self.memoize = memoize
        # Each count is at most n, so n.bit_length() bits per alternative suffice.
        self.width = max(1, self.n.bit_length())
        self.field = (1 << self.width) - 1
        self.moves = _moves(profile.rule, self.m, self.width)
        self.utilities = [utility_table(v.ranking) for v in profile.voters]
        self.tie_positions: Tuple[int, ...] = (
            profile.tie.order.positions if profile.tie.kind == TieKind.DETERMINISTIC else ()
        )
        self.memo: List[Dict[int, int]] = [dict() for _ in range(self.n + 1)]
        self.states_visited = 0
        self.memo_hits = 0

    def unpack(self, packed: int) -> Tuple[int, ...]:
        return tuple((packed >> (self.width * alt)) & self.field for alt in range(self.m))

    def pack(self, counts: Sequence[int]) -> int:
        packed = 0
        for alt, count in enumerate(counts):
            packed |= count << (self.width * alt)
        return packed

    def terminal(self, packed: int) -> int:
        return winner_mask(self.unpack(packed), self.tie_positions)

    def value(self, level: int, packed: int) -> int:
        """Winning-set mask reached from this state under equilibrium play."""
        table = self.memo[level]
        if self.memoize:
            cached = table.get(packed)
            if cached:
                self.memo_hits += 1
                return cached
        self.states_visited += 1
        if level == self.n:
            outcome = self.terminal(packed)
        else:
            utility = self.utilities[level]
            outcome, best = 0, -1
            for _, delta in self.moves:
                candidate = self.value(level + 1, packed + delta)
                if utility[candidate] > best:
                    outcome, best = candidate, utility[candidate]
        if self.memoize:
            table[packed] = outcome
        return outcome

    def path(self) -> List[int]:
        """Walk forward choosing the first optimal ballot in canonical order."""
        packed, ballots = 0, []
        for level in range(self.n):
            target = self.value(level, packed)
            for mask, delta in self.moves:
                if self.value(level + 1, packed + delta) == target:
                    ballots.append(mask)
                    packed += delta
                    break
        return ballots

    def history_value(self, history: Tuple[int, ...]) -> int:
        """Full game-tree recursion on ballot histories, no state merging."""
        level = len(history)
        if level == self.n:
            counts = [sum(1 for mask in history if mask >> alt & 1) for alt in range(self.m)]
            return winner_mask(counts, self.tie_positions)
        utility = self.utilities[level]
        outcome, best = 0, -1
        for mask, _ in self.moves:
            candidate = self.history_value(history + (mask,))
            if utility[candidate] > best:
                outcome, best = candidate, utility[candidate]
        return outcome


class SequentialSolver:
    """Subgame-perfect equilibrium outcomes of sequential elections."""

    def outcome_mask(self, profile: Profile, memoize: Optional[bool] = None) -> int:
        memoize = settings.SOLVER_MEMOIZE if memoize is None else memoize
        return GameTree(profile, memoize=memoize).value(0, 0)

    def spe_outcome(self, profile: Profile, memoize: Optional[bool] = None) -> WinningSet:
        return WinningSet.from_mask(self.outcome_mask(profile, memoize))

    def spe_path(self, profile: Profile) -> SolveResult:
        tree = GameTree(profile, memoize=True)
        masks = tree.path()
        outcome = WinningSet.from_mask(tree.value(0, 0))
        stats = SolveStats(states_visited=tree.states_visited, memo_hits=tree.memo_hits)
        logger.debug(
            "solved n=%d m=%d %s/%s: states=%d hits=%d",
            profile.n, profile.m, profile.rule.value, profile.tie.kind.value,
            stats.states_visited, stats.memo_hits,
        )
        return SolveResult(
            outcome=outcome,
            path=tuple(Ballot.from_mask(mask) for mask in masks),
            stats=stats,
        )

    def naive_outcome(self, profile: Profile) -> WinningSet:
        branching = len(ballot_masks(profile.rule, profile.m))
        if branching ** profile.n > settings.NAIVE_TREE_LIMIT:
            raise FeasibilityError(
                f"game tree too large for the history oracle: {branching}^{profile.n} leaves"
            )
        return WinningSet.from_mask(GameTree(profile).history_value(()))

    def replay(self, profile: Profile, path: Sequence[Ballot]) -> WinningSet:
        """Feed a ballot sequence through the tally from zero and read the winners."""
        state = TallyState.zero(profile.m)
        for ballot in path:
            state = election_model.apply_ballot(state, ballot, profile)
        return election_model.winning_set(state.counts, profile.tie)

    def sincere_outcome(self, profile: Profile) -> WinningSet:
        """Winners when every voter approves only their favourite."""
        counts = [0] * profile.m
        for voter in profile.voters:
            counts[voter.ranking[0]] += 1
        return election_model.winning_set(counts, profile.tie)


# Singleton instance
spe_solver = SequentialSolver()
