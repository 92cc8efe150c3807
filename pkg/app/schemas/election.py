"""
Election Schemas

Immutable pydantic models for profiles, ballots, tallies and winning sets.
Alternatives are referred to by index everywhere; labels are for display only.
"""

import re
from enum import Enum
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

LABEL_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")


class VotingRule(str, Enum):
    PLURALITY = "plurality"
    APPROVAL = "approval"


class TieKind(str, Enum):
    DETERMINISTIC = "deterministic"
    UNIFORM = "uniform"


# The four voting systems: every rule paired with every tie-breaking kind.
VOTING_SYSTEMS: Tuple[Tuple[VotingRule, TieKind], ...] = (
    (VotingRule.PLURALITY, TieKind.DETERMINISTIC),
    (VotingRule.PLURALITY, TieKind.UNIFORM),
    (VotingRule.APPROVAL, TieKind.DETERMINISTIC),
    (VotingRule.APPROVAL, TieKind.UNIFORM),
)


def default_labels(m: int) -> Tuple[str, ...]:
    """A, B, C, ... for up to 26 alternatives, then A26, A27, ..."""
    return tuple(chr(ord("A") + i) if i < 26 else f"A{i}" for i in range(m))


class AlternativeId(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    label: str

    @field_validator("label")
    @classmethod
    def _label_format(cls, value: str) -> str:
        if not LABEL_PATTERN.match(value):
            raise ValueError(f"invalid alternative label {value!r}")
        return value


class PreferenceOrder(BaseModel):
    """A strict total order over alternative indices, most preferred first."""
    model_config = ConfigDict(frozen=True)

    ranking: Tuple[int, ...]

    @field_validator("ranking")
    @classmethod
    def _is_permutation(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(value) != list(range(len(value))):
            raise ValueError("ranking must list every alternative exactly once")
        return value

    @classmethod
    def identity(cls, m: int) -> "PreferenceOrder":
        return cls(ranking=tuple(range(m)))

    @property
    def positions(self) -> Tuple[int, ...]:
        """positions[a] is the rank of alternative a (0 = favourite)."""
        pos = [0] * len(self.ranking)
        for rank, alt in enumerate(self.ranking):
            pos[alt] = rank
        return tuple(pos)

    def prefers(self, a: int, b: int) -> bool:
        return self.ranking.index(a) < self.ranking.index(b)


class TieRule(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: TieKind
    order: Optional[PreferenceOrder] = None

    @model_validator(mode="after")
    def _order_matches_kind(self) -> "TieRule":
        if self.kind == TieKind.DETERMINISTIC and self.order is None:
            raise ValueError("deterministic tie-breaking needs a tie order")
        if self.kind == TieKind.UNIFORM and self.order is not None:
            raise ValueError("uniform tie-breaking takes no tie order")
        return self

    @classmethod
    def uniform(cls) -> "TieRule":
        return cls(kind=TieKind.UNIFORM)

    @classmethod
    def deterministic(cls, order: Sequence[int]) -> "TieRule":
        return cls(kind=TieKind.DETERMINISTIC, order=PreferenceOrder(ranking=tuple(order)))


class Profile(BaseModel):
    """Alternatives, voters in speaking order, the voting rule and the tie rule."""
    model_config = ConfigDict(frozen=True)

    alternatives: Tuple[AlternativeId, ...]
    voters: Tuple[PreferenceOrder, ...]
    rule: VotingRule
    tie: TieRule

    @model_validator(mode="after")
    def _consistent(self) -> "Profile":
        m = len(self.alternatives)
        if m < 1:
            raise ValueError("a profile needs at least one alternative")
        if [a.index for a in self.alternatives] != list(range(m)):
            raise ValueError("alternative indices must be 0..m-1 in order")
        if len({a.label for a in self.alternatives}) != m:
            raise ValueError("alternative labels must be distinct")
        if not self.voters:
            raise ValueError("a profile needs at least one voter")
        for i, voter in enumerate(self.voters):
            if len(voter.ranking) != m:
                raise ValueError(f"voter {i + 1} does not rank all {m} alternatives")
        if self.tie.order is not None and len(self.tie.order.ranking) != m:
            raise ValueError(f"tie order does not rank all {m} alternatives")
        return self

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return len(self.voters)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(a.label for a in self.alternatives)

    def label_of(self, index: int) -> str:
        return self.alternatives[index].label

    def index_of(self, label: str) -> int:
        for alt in self.alternatives:
            if alt.label == label:
                return alt.index
        raise KeyError(label)

    def format_order(self, order: PreferenceOrder) -> str:
        return ">".join(self.label_of(a) for a in order.ranking)

    def format_set(self, indices: FrozenSet[int]) -> str:
        return "{" + ",".join(self.label_of(a) for a in sorted(indices)) + "}"

    @classmethod
    def from_labels(
        cls,
        labels: Sequence[str],
        rankings: Sequence[Sequence[str]],
        rule: VotingRule,
        tie_order: Optional[Sequence[str]] = None,
    ) -> "Profile":
        """Build a profile from label rankings; no tie order means uniform."""
        lookup: Dict[str, int] = {label: i for i, label in enumerate(labels)}
        tie = (
            TieRule.deterministic([lookup[x] for x in tie_order])
            if tie_order is not None
            else TieRule.uniform()
        )
        return cls(
            alternatives=tuple(AlternativeId(index=i, label=l) for i, l in enumerate(labels)),
            voters=tuple(PreferenceOrder(ranking=tuple(lookup[x] for x in r)) for r in rankings),
            rule=rule,
            tie=tie,
        )


class Ballot(BaseModel):
    """One voter's cast vote; the empty set is an abstention."""
    model_config = ConfigDict(frozen=True)

    approved: FrozenSet[int] = frozenset()

    @property
    def mask(self) -> int:
        mask = 0
        for alt in self.approved:
            mask |= 1 << alt
        return mask

    @classmethod
    def from_mask(cls, mask: int) -> "Ballot":
        return cls(approved=frozenset(i for i in range(mask.bit_length()) if mask >> i & 1))


class TallyState(BaseModel):
    """Votes per alternative plus the index of the voter about to move."""
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]
    next: int = Field(..., ge=0)

    @field_validator("counts")
    @classmethod
    def _non_negative(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(c < 0 for c in value):
            raise ValueError("vote counts must be non-negative")
        return value

    @model_validator(mode="after")
    def _counts_within_ballots_cast(self) -> "TallyState":
        if self.counts and max(self.counts) > self.next:
            raise ValueError("an alternative has more votes than ballots cast")
        return self

    @classmethod
    def zero(cls, m: int) -> "TallyState":
        return cls(counts=(0,) * m, next=0)


class WinningSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    winners: FrozenSet[int]

    @field_validator("winners")
    @classmethod
    def _nonempty(cls, value: FrozenSet[int]) -> FrozenSet[int]:
        if not value:
            raise ValueError("a winning set is never empty")
        return value

    @property
    def is_singleton(self) -> bool:
        return len(self.winners) == 1

    @property
    def mask(self) -> int:
        mask = 0
        for alt in self.winners:
            mask |= 1 << alt
        return mask

    @classmethod
    def from_mask(cls, mask: int) -> "WinningSet":
        return cls(winners=frozenset(i for i in range(mask.bit_length()) if mask >> i & 1))
