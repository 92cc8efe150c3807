"""
Shared command-line plumbing: exit codes, the argument parser and argument
converters used by several commands.
"""

import argparse
import sys
from typing import Optional, Tuple

from app.core.exceptions import ElectionError
from app.schemas.analysis import ParadoxKind
from app.schemas.election import TieKind, VotingRule, default_labels

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_REFUSED = 3


class CliArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2 for mismatches."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rule_arg(value: str) -> VotingRule:
    try:
        return VotingRule(value.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown rule {value!r} (plurality, approval)")


def paradox_arg(value: str) -> ParadoxKind:
    try:
        return ParadoxKind(value.lower().replace("-", "_"))
    except ValueError:
        choices = ", ".join(kind.value for kind in ParadoxKind)
        raise argparse.ArgumentTypeError(f"unknown paradox {value!r} ({choices})")


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value!r} must be at least 1")
    return number


def tie_arg(value: str) -> Tuple[TieKind, Optional[Tuple[str, ...]]]:
    """`uniform`, `deterministic` or `deterministic:C>B>A` (labels A, B, C, ...)."""
    kind, _, order = value.partition(":")
    try:
        tie = TieKind(kind.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown tie rule {value!r}")
    if order and tie != TieKind.DETERMINISTIC:
        raise argparse.ArgumentTypeError("only deterministic tie-breaking takes an order")
    return tie, tuple(label.strip() for label in order.split(">")) if order else None


def resolve_tie_order(labels: Optional[Tuple[str, ...]], m: int) -> Optional[Tuple[int, ...]]:
    if labels is None:
        return None
    lookup = {label: i for i, label in enumerate(default_labels(m))}
    unknown = [label for label in labels if label not in lookup]
    if unknown or sorted(lookup[l] for l in labels) != list(range(m)):
        raise ElectionError(
            f"tie order must rank each of {','.join(default_labels(m))} exactly once"
        )
    return tuple(lookup[label] for label in labels)
