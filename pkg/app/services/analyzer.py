"""
Paradox Analyzer Service

Pairwise-majority structure of a profile (Condorcet winner and loser, Pareto
dominations) and classification of an election outcome against it.
"""

from typing import FrozenSet, List, Optional, Tuple

from app.core.exceptions import ElectionError
from app.schemas.analysis import ParadoxFlags, ParadoxReport
from app.schemas.election import Profile, WinningSet


class ParadoxAnalyzer:

    def _positions(self, profile: Profile) -> List[Tuple[int, ...]]:
        return [voter.positions for voter in profile.voters]

    def _margin(self, positions: List[Tuple[int, ...]], a: int, b: int) -> int:
        # Strict orders: every voter counts on exactly one side.
        above = sum(1 for pos in positions if pos[a] < pos[b])
        return 2 * above - len(positions)

    def pairwise_margin(self, profile: Profile, a: int, b: int) -> int:
        """Voters ranking a above b minus voters ranking b above a."""
        if a == b:
            raise ElectionError("an alternative has no margin against itself")
        if not (0 <= a < profile.m and 0 <= b < profile.m):
            raise ElectionError("unknown alternative")
        return self._margin(self._positions(profile), a, b)

    def margin_matrix(self, profile: Profile) -> List[List[int]]:
        positions = self._positions(profile)
        m = profile.m
        return [
            [0 if a == b else self._margin(positions, a, b) for b in range(m)]
            for a in range(m)
        ]

    def _condorcet(self, matrix: List[List[int]], sign: int) -> Optional[int]:
        m = len(matrix)
        for a in range(m):
            if all(sign * matrix[a][b] > 0 for b in range(m) if b != a):
                return a
        return None

    def condorcet_winner(self, profile: Profile) -> Optional[int]:
        return self._condorcet(self.margin_matrix(profile), 1)

    def condorcet_loser(self, profile: Profile) -> Optional[int]:
        return self._condorcet(self.margin_matrix(profile), -1)

    def pareto_dominations(self, profile: Profile) -> FrozenSet[Tuple[int, int]]:
        """Ordered pairs (x, y) such that every voter ranks x above y."""
        positions = self._positions(profile)
        m = profile.m
        return frozenset(
            (x, y)
            for x in range(m)
            for y in range(m)
            if x != y and all(pos[x] < pos[y] for pos in positions)
        )

    def majority_favourite(self, profile: Profile) -> Optional[int]:
        """The alternative ranked first by a strict majority of voters, if any."""
        tops = [voter.ranking[0] for voter in profile.voters]
        for alt in set(tops):
            if 2 * tops.count(alt) > profile.n:
                return alt
        return None

    def classify_paradoxes(self, profile: Profile, winning: WinningSet) -> ParadoxReport:
        matrix = self.margin_matrix(profile)
        winner = self._condorcet(matrix, 1)
        loser = self._condorcet(matrix, -1)
        pairs = self.pareto_dominations(profile)
        dominated = {y for _, y in pairs}
        winners = winning.winners

        flags = ParadoxFlags(
            condorcet_winner_paradox=winner is not None and winner not in winners,
            condorcet_loser_paradox=loser is not None and winners == frozenset({loser}),
            pareto_weak=bool(dominated & winners),
            pareto_strong=winning.is_singleton and bool(dominated & winners),
        )
        return ParadoxReport(
            condorcet_winner=winner,
            condorcet_loser=loser,
            pareto_pairs=pairs,
            flags=flags,
        )


# Singleton instance
paradox_analyzer = ParadoxAnalyzer()
