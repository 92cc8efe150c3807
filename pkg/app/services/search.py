"""
Profile Search Service

Enumerates preference-profile spaces, scans them for paradox instances and
certifies paradox absence on bounded spaces.

Profiles are addressed by their position in the enumeration stream, which
makes the stream shardable: contiguous index ranges go to worker processes
and results are merged back in index order, so the output never depends on
the number of workers.
"""

import math
from functools import lru_cache
from itertools import permutations
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import ElectionError, FeasibilityError
from app.core.logging import get_logger
from app.schemas.election import (
    AlternativeId,
    PreferenceOrder,
    Profile,
    TieKind,
    TieRule,
    WinningSet,
    default_labels,
)
from app.schemas.search import AbsenceCertificate, SearchHit, SearchOutcome, SearchSpec
from app.services.analyzer import paradox_analyzer
from app.services.election import ballot_masks
from app.services.solver import spe_solver, state_bound

logger = get_logger(__name__)


@lru_cache(maxsize=16)
def strict_orders(m: int) -> Tuple[Tuple[int, ...], ...]:
    """All m! rankings in lexicographic order."""
    return tuple(permutations(range(m)))


@lru_cache(maxsize=16)
def _alternatives(m: int) -> Tuple[AlternativeId, ...]:
    return tuple(AlternativeId(index=i, label=label) for i, label in enumerate(default_labels(m)))


def _scan_shard(task: Tuple[SearchSpec, int, int]) -> Tuple[int, List[Tuple[int, int]]]:
    """Solve profiles [start, stop); return (scanned, [(index, outcome mask)])."""
    spec, start, stop = task
    hits: List[Tuple[int, int]] = []
    scanned = 0
    for index in range(start, stop):
        profile = profile_searcher.profile_at(spec, index)
        outcome = spe_solver.spe_outcome(profile)
        report = paradox_analyzer.classify_paradoxes(profile, outcome)
        scanned += 1
        if report.flags.get(spec.paradox):
            hits.append((index, outcome.mask))
            if spec.limit is not None and len(hits) >= spec.limit:
                break
    return scanned, hits


class ProfileSearcher:
    """Enumeration, canonicalization and paradox hunting over profile spaces."""

    def tie_orders(self, spec: SearchSpec) -> Sequence[Optional[Tuple[int, ...]]]:
        if spec.tie == TieKind.UNIFORM:
            return (None,)
        if spec.tie_order is not None:
            return (spec.tie_order,)
        if spec.canonical:
            return (tuple(range(spec.m)),)
        return strict_orders(spec.m)

    def _free_voters(self, spec: SearchSpec) -> int:
        # Under uniform tie-breaking the canonical space pins voter 1 instead.
        if spec.canonical and spec.tie == TieKind.UNIFORM:
            return spec.n - 1
        return spec.n

    def count_profiles(self, spec: SearchSpec) -> int:
        orders = math.factorial(spec.m)
        return len(self.tie_orders(spec)) * orders ** self._free_voters(spec)

    def profile_at(self, spec: SearchSpec, index: int) -> Profile:
        """Decode a stream position; the last voter varies fastest."""
        orders = strict_orders(spec.m)
        free = self._free_voters(spec)
        block = len(orders) ** free
        tie_index, rest = divmod(index, block)
        digits = []
        for _ in range(free):
            rest, digit = divmod(rest, len(orders))
            digits.append(orders[digit])
        rankings = digits[::-1]
        if free < spec.n:
            rankings.insert(0, orders[0])

        tie_order = self.tie_orders(spec)[tie_index]
        tie = TieRule.uniform() if tie_order is None else TieRule.deterministic(tie_order)
        return Profile(
            alternatives=_alternatives(spec.m),
            voters=tuple(PreferenceOrder(ranking=r) for r in rankings),
            rule=spec.rule,
            tie=tie,
        )

    def enumerate_profiles(self, spec: SearchSpec) -> Iterator[Profile]:
        for index in range(self.count_profiles(spec)):
            yield self.profile_at(spec, index)

    def relabel(self, profile: Profile, permutation: Sequence[int]) -> Profile:
        """Rename alternative a to permutation[a] in every ranking and the tie order."""
        if sorted(permutation) != list(range(profile.m)):
            raise ElectionError("relabeling must be a permutation of the alternatives")

        def mapped(order: PreferenceOrder) -> PreferenceOrder:
            return PreferenceOrder(ranking=tuple(permutation[a] for a in order.ranking))

        tie = profile.tie
        if tie.kind == TieKind.DETERMINISTIC:
            tie = TieRule(kind=TieKind.DETERMINISTIC, order=mapped(tie.order))
        return Profile(
            alternatives=profile.alternatives,
            voters=tuple(mapped(v) for v in profile.voters),
            rule=profile.rule,
            tie=tie,
        )

    def canonical_permutation(self, profile: Profile) -> Tuple[int, ...]:
        anchor = (
            profile.tie.order if profile.tie.kind == TieKind.DETERMINISTIC else profile.voters[0]
        )
        permutation = [0] * profile.m
        for rank, alt in enumerate(anchor.ranking):
            permutation[alt] = rank
        return tuple(permutation)

    def canonicalize(self, profile: Profile) -> Profile:
        """Representative whose tie order (deterministic) or first voter (uniform) is A>B>..."""
        return self.relabel(profile, self.canonical_permutation(profile))

    def _work_estimate(self, spec: SearchSpec) -> int:
        branching = len(ballot_masks(spec.rule, spec.m))
        return self.count_profiles(spec) * state_bound(spec.n, spec.m) * branching

    def find_paradoxes(self, spec: SearchSpec, workers: Optional[int] = None) -> SearchOutcome:
        total = self.count_profiles(spec)
        if spec.limit is None and self._work_estimate(spec) > settings.SEARCH_WORK_LIMIT:
            raise FeasibilityError(
                f"search space too large: {total} profiles of n={spec.n}, m={spec.m}; "
                "give a hit limit or a smaller space"
            )

        workers = settings.SEARCH_WORKERS if workers is None else workers
        shard = max(1, settings.SEARCH_SHARD_SIZE)
        tasks = [(spec, start, min(start + shard, total)) for start in range(0, total, shard)]
        logger.info(
            "scanning %d profiles (%s/%s, %s) in %d shards on %d worker(s)",
            total, spec.rule.value, spec.tie.value, spec.paradox.value, len(tasks), workers,
        )

        if workers > 1 and len(tasks) > 1:
            with Pool(workers) as pool:
                hits, scanned = self._merge(spec, pool.imap(_scan_shard, tasks))
        else:
            hits, scanned = self._merge(spec, map(_scan_shard, tasks))

        logger.info("scanned %d of %d profiles, %d hit(s)", scanned, total, len(hits))
        return SearchOutcome(
            hits=tuple(hits),
            exhausted=scanned == total,
            profiles_scanned=scanned,
        )

    def _merge(self, spec: SearchSpec, results: Iterator) -> Tuple[List[SearchHit], int]:
        """Consume shard results in stream order, stopping once the limit is met."""
        hits: List[SearchHit] = []
        scanned = 0
        for shard_scanned, shard_hits in results:
            for index, mask in shard_hits:
                hits.append(self._hit(spec, index, mask))
                if spec.limit is not None and len(hits) >= spec.limit:
                    return hits, index + 1
            scanned += shard_scanned
        return hits, scanned

    def _hit(self, spec: SearchSpec, index: int, mask: int) -> SearchHit:
        profile = self.profile_at(spec, index)
        outcome = WinningSet.from_mask(mask)
        return SearchHit(
            index=index,
            profile=profile,
            outcome=outcome,
            report=paradox_analyzer.classify_paradoxes(profile, outcome),
        )

    def verify_absence(self, spec: SearchSpec, workers: Optional[int] = None) -> AbsenceCertificate:
        """Exhaustive scan of the canonical space; absent iff nothing was found."""
        full = spec.model_copy(update={"limit": None, "canonical": True})
        outcome = self.find_paradoxes(full, workers=workers)
        return AbsenceCertificate(
            absent=outcome.exhausted and not outcome.hits,
            profiles_scanned=outcome.profiles_scanned,
        )

    def hunt(self, spec: SearchSpec, max_voters: int, workers: Optional[int] = None) -> SearchOutcome:
        """Search n = spec.n .. max_voters and stop at the first voter count with a hit."""
        limited = spec if spec.limit is not None else spec.model_copy(update={"limit": 1})
        outcome = SearchOutcome()
        for n in range(spec.n, max_voters + 1):
            outcome = self.find_paradoxes(limited.model_copy(update={"n": n}), workers=workers)
            if outcome.hits:
                break
        return outcome


# Singleton instance
profile_searcher = ProfileSearcher()
