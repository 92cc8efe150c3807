"""
search: hunt for paradox instances in a profile space.
"""

import argparse
import json
from typing import Any, Dict

from app.cli.deps import EXIT_OK, paradox_arg, positive_int, resolve_tie_order, rule_arg, tie_arg
from app.schemas.search import SearchHit, SearchOutcome, SearchSpec
from app.services.profile_io import profile_codec
from app.services.reporter import REPORT_FORMATS, report_formatter
from app.services.search import profile_searcher


def register(subparsers) -> None:
    parser = subparsers.add_parser("search", help="Search a profile space for a paradox")
    parser.add_argument("--voters", type=positive_int, required=True)
    parser.add_argument("--alts", type=positive_int, required=True)
    parser.add_argument("--rule", type=rule_arg, required=True)
    parser.add_argument("--tie", type=tie_arg, required=True,
                        help="uniform, deterministic or deterministic:C>B>A")
    parser.add_argument("--paradox", type=paradox_arg, required=True)
    parser.add_argument("--limit", type=positive_int, default=None)
    parser.add_argument("--no-canonical", dest="canonical", action="store_false")
    parser.add_argument("--workers", type=positive_int, default=None)
    parser.add_argument("--max-voters", type=positive_int, default=None,
                        help="Try voter counts up to this bound, stopping at the first hit")
    parser.add_argument("--format", choices=REPORT_FORMATS, default="text")
    parser.set_defaults(handler=run)


def _hit_payload(hit: SearchHit) -> Dict[str, Any]:
    profile = hit.profile
    return {
        "index": hit.index,
        "profile": profile_codec.serialize_profile(profile),
        "winners": [profile.label_of(a) for a in sorted(hit.outcome.winners)],
        "paradoxes": hit.report.flags.model_dump(),
    }


def _format_text(spec: SearchSpec, outcome: SearchOutcome) -> str:
    lines = [
        f"{len(outcome.hits)} hit(s), {outcome.profiles_scanned} profile(s) scanned, "
        f"exhausted: {'yes' if outcome.exhausted else 'no'}"
    ]
    if outcome.exhausted and not outcome.hits and spec.canonical:
        lines.append(f"No {spec.paradox.value} paradox exists in this space.")
    for hit in outcome.hits:
        lines.append("")
        lines.append(f"# profile #{hit.index}, winners "
                     f"{hit.profile.format_set(hit.outcome.winners)}, "
                     f"paradoxes: {report_formatter.describe_flags(hit.report.flags)}")
        lines.append(profile_codec.serialize_profile(hit.profile).rstrip())
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    tie, order_labels = args.tie
    spec = SearchSpec(
        n=args.voters,
        m=args.alts,
        rule=args.rule,
        tie=tie,
        paradox=args.paradox,
        limit=args.limit,
        canonical=args.canonical,
        tie_order=resolve_tie_order(order_labels, args.alts),
    )
    if args.max_voters is not None:
        outcome = profile_searcher.hunt(spec, args.max_voters, workers=args.workers)
    else:
        outcome = profile_searcher.find_paradoxes(spec, workers=args.workers)

    if args.format == "json":
        print(json.dumps({
            "hits": [_hit_payload(hit) for hit in outcome.hits],
            "exhausted": outcome.exhausted,
            "profiles_scanned": outcome.profiles_scanned,
        }, indent=2))
    else:
        print(_format_text(spec, outcome))
    return EXIT_OK
