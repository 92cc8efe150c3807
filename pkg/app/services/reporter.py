"""
Report Formatter Service

Renders a solved and classified profile as an aligned text table or as JSON
with stable field names.
"""

import json
from typing import Any, Dict, List, Optional

from app.core.exceptions import ElectionError
from app.schemas.analysis import ParadoxFlags, ParadoxKind, ParadoxReport
from app.schemas.election import Profile, WinningSet
from app.schemas.solve import SolveResult

REPORT_FORMATS = ("text", "json")


class ReportFormatter:
    """Text and JSON reports for a single election."""

    def _labels(self, profile: Profile, indices) -> List[str]:
        return [profile.label_of(i) for i in sorted(indices)]

    def _optional_label(self, profile: Profile, index: Optional[int]) -> Optional[str]:
        return None if index is None else profile.label_of(index)

    def build_payload(
        self, profile: Profile, result: SolveResult, report: ParadoxReport
    ) -> Dict[str, Any]:
        """Field names are part of the output contract; do not rename."""
        return {
            "winners": self._labels(profile, result.outcome.winners),
            "path": [self._labels(profile, ballot.approved) for ballot in result.path],
            "condorcet_winner": self._optional_label(profile, report.condorcet_winner),
            "condorcet_loser": self._optional_label(profile, report.condorcet_loser),
            "pareto_pairs": [
                [profile.label_of(x), profile.label_of(y)] for x, y in sorted(report.pareto_pairs)
            ],
            "paradoxes": {
                kind.value: report.flags.get(kind) for kind in ParadoxKind
            },
            "stats": {
                "states_visited": result.stats.states_visited,
                "memo_hits": result.stats.memo_hits,
            },
        }

    def format_report(
        self,
        profile: Profile,
        result: SolveResult,
        report: ParadoxReport,
        fmt: str = "text",
        show_path: bool = True,
        sincere: Optional[WinningSet] = None,
    ) -> str:
        if fmt == "json":
            return json.dumps(self.build_payload(profile, result, report), indent=2)
        if fmt == "text":
            return self._format_text(profile, result, report, show_path, sincere)
        raise ElectionError(f"unknown report format {fmt!r}; expected one of {REPORT_FORMATS}")

    def _format_text(
        self,
        profile: Profile,
        result: SolveResult,
        report: ParadoxReport,
        show_path: bool,
        sincere: Optional[WinningSet],
    ) -> str:
        tie = profile.tie.kind.value
        if profile.tie.order is not None:
            tie += f" ({profile.format_order(profile.tie.order)})"
        lines = [
            f"{profile.rule.value.capitalize()} voting, {tie} tie-breaking, "
            f"{profile.n} voters, {profile.m} alternatives",
            "",
        ]

        rows = [["Voter", "Preference"] + (["Ballot"] if show_path else [])]
        for i, voter in enumerate(profile.voters):
            row = [str(i + 1), " > ".join(profile.label_of(a) for a in voter.ranking)]
            if show_path:
                row.append(profile.format_set(result.path[i].approved))
            rows.append(row)
        widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())

        lines.append("")
        lines.append(f"Outcome:            {profile.format_set(result.outcome.winners)}")
        if sincere is not None:
            lines.append(f"Sincere outcome:    {profile.format_set(sincere.winners)}")
        lines.append(
            f"Condorcet winner:   {self._optional_label(profile, report.condorcet_winner) or '-'}"
        )
        lines.append(
            f"Condorcet loser:    {self._optional_label(profile, report.condorcet_loser) or '-'}"
        )
        pairs = ", ".join(
            f"{profile.label_of(x)}>{profile.label_of(y)}" for x, y in sorted(report.pareto_pairs)
        )
        lines.append(f"Pareto dominations: {pairs or '-'}")
        lines.append(f"Paradoxes:          {self.describe_flags(report.flags)}")
        lines.append(
            f"States visited:     {result.stats.states_visited} "
            f"(memo hits {result.stats.memo_hits})"
        )
        return "\n".join(lines)

    def describe_flags(self, flags: ParadoxFlags) -> str:
        raised = [kind.value for kind in ParadoxKind if flags.get(kind)]
        return ", ".join(raised) if raised else "none"


# Singleton instance
report_formatter = ReportFormatter()
