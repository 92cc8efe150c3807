"""
Profile Document Codec

Reads and writes the line-oriented profile format:

    rule=plurality|approval
    tie=uniform | tie=deterministic:C>B>A
    alts=A,B,C
    C>A>B          (one voter per line, in speaking order)

`#` starts a comment and blank lines are ignored.
"""

from pathlib import Path
from typing import Dict, List, Tuple

from pydantic import ValidationError

from app.core.exceptions import ProfileParseError
from app.schemas.election import (
    LABEL_PATTERN,
    AlternativeId,
    PreferenceOrder,
    Profile,
    TieKind,
    TieRule,
    VotingRule,
)
from app.schemas.fixture import ProfileDocument

HEADER_KEYS = ("rule", "tie", "alts")


class ProfileCodec:

    def _ranking(self, text: str, lookup: Dict[str, int], line: int) -> Tuple[int, ...]:
        ranking: List[int] = []
        for raw in text.split(">"):
            label = raw.strip()
            if label not in lookup:
                raise ProfileParseError(f"unknown alternative {label!r}", line)
            if lookup[label] in ranking:
                raise ProfileParseError(f"duplicate alternative {label!r}", line)
            ranking.append(lookup[label])
        if len(ranking) != len(lookup):
            missing = [l for l, i in lookup.items() if i not in ranking]
            raise ProfileParseError(f"missing alternative {', '.join(missing)}", line)
        return tuple(ranking)

    def _header(self, line: str, key: str, lineno: int) -> str:
        name, sep, value = line.partition("=")
        if not sep or name.strip() != key:
            raise ProfileParseError(f"expected '{key}=...'", lineno)
        return value.strip()

    def parse_profile(self, text: str) -> Profile:
        header: Dict[str, Tuple[str, int]] = {}
        voter_lines: List[Tuple[str, int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if len(header) < len(HEADER_KEYS):
                key = HEADER_KEYS[len(header)]
                header[key] = (self._header(line, key, lineno), lineno)
            else:
                voter_lines.append((line, lineno))

        if len(header) < len(HEADER_KEYS):
            missing = HEADER_KEYS[len(header)]
            raise ProfileParseError(f"missing '{missing}=' line")

        rule_text, rule_line = header["rule"]
        try:
            rule = VotingRule(rule_text)
        except ValueError:
            raise ProfileParseError(f"unknown rule {rule_text!r}", rule_line)

        alts_text, alts_line = header["alts"]
        labels = [label.strip() for label in alts_text.split(",")]
        for label in labels:
            if not LABEL_PATTERN.match(label):
                raise ProfileParseError(f"invalid alternative label {label!r}", alts_line)
        if len(set(labels)) != len(labels):
            raise ProfileParseError("duplicate alternative in alts", alts_line)
        lookup = {label: i for i, label in enumerate(labels)}

        tie_text, tie_line = header["tie"]
        kind, _, order_text = tie_text.partition(":")
        if kind == TieKind.UNIFORM.value and not order_text:
            tie = TieRule.uniform()
        elif kind == TieKind.DETERMINISTIC.value and order_text:
            tie = TieRule.deterministic(self._ranking(order_text, lookup, tie_line))
        else:
            raise ProfileParseError(f"unknown tie rule {tie_text!r}", tie_line)

        if not voter_lines:
            raise ProfileParseError("profile has no voters")
        voters = tuple(
            PreferenceOrder(ranking=self._ranking(line, lookup, lineno))
            for line, lineno in voter_lines
        )

        try:
            return Profile(
                alternatives=tuple(AlternativeId(index=i, label=l) for i, l in enumerate(labels)),
                voters=voters,
                rule=rule,
                tie=tie,
            )
        except ValidationError as e:
            raise ProfileParseError(str(e))

    def serialize_profile(self, profile: Profile) -> str:
        if profile.tie.kind == TieKind.DETERMINISTIC:
            tie = f"deterministic:{profile.format_order(profile.tie.order)}"
        else:
            tie = "uniform"
        lines = [
            f"rule={profile.rule.value}",
            f"tie={tie}",
            f"alts={','.join(profile.labels)}",
        ]
        lines.extend(profile.format_order(voter) for voter in profile.voters)
        return "\n".join(lines) + "\n"

    def load_document(self, path: str) -> ProfileDocument:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ProfileParseError(f"cannot read {path}: {e.strerror}")
        except UnicodeDecodeError as e:
            raise ProfileParseError(f"{path} is not valid UTF-8 (byte {e.start})")
        return ProfileDocument(text=text, source=path)

    def load_profile(self, path: str) -> Profile:
        return self.parse_profile(self.load_document(path).text)


# Singleton instance
profile_codec = ProfileCodec()
