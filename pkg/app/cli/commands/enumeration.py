"""
enumerate: size (or contents) of a profile space.
"""

import argparse

from app.cli.deps import EXIT_OK, positive_int, resolve_tie_order, rule_arg, tie_arg
from app.schemas.election import TieKind, VotingRule
from app.schemas.search import SearchSpec
from app.services.profile_io import profile_codec
from app.services.search import profile_searcher


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate", help="Count or list the profiles of a space")
    parser.add_argument("--voters", type=positive_int, required=True)
    parser.add_argument("--alts", type=positive_int, required=True)
    parser.add_argument("--canonical", action="store_true")
    parser.add_argument("--rule", type=rule_arg, default=VotingRule.PLURALITY)
    parser.add_argument("--tie", type=tie_arg, default=(TieKind.UNIFORM, None))
    parser.add_argument("--list", action="store_true", help="Print every profile document")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    tie, order_labels = args.tie
    spec = SearchSpec(
        n=args.voters,
        m=args.alts,
        rule=args.rule,
        tie=tie,
        canonical=args.canonical,
        tie_order=resolve_tie_order(order_labels, args.alts),
    )
    if args.list:
        for index, profile in enumerate(profile_searcher.enumerate_profiles(spec)):
            print(f"# profile #{index}")
            print(profile_codec.serialize_profile(profile))
    print(f"{profile_searcher.count_profiles(spec)} profiles")
    return EXIT_OK
