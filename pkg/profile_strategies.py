"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from app.schemas.election import (
    AlternativeId,
    PreferenceOrder,
    Profile,
    TieRule,
    VotingRule,
    default_labels,
)


@st.composite
def preference_orders(draw, m: int):
    return PreferenceOrder(ranking=tuple(draw(st.permutations(range(m)))))


@st.composite
def profiles(draw, max_m: int = 4, max_n: int = 6):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    voters = tuple(draw(preference_orders(m)) for _ in range(n))
    tie_order = draw(st.one_of(st.none(), st.permutations(range(m))))
    return Profile(
        alternatives=tuple(AlternativeId(index=i, label=l) for i, l in enumerate(default_labels(m))),
        voters=voters,
        rule=draw(st.sampled_from(list(VotingRule))),
        tie=TieRule.uniform() if tie_order is None else TieRule.deterministic(tie_order),
    )
