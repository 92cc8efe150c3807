"""
analyze: majority structure and paradox flags of a profile file.
"""

import argparse

from app.cli.deps import EXIT_OK
from app.core.config import settings
from app.services.analyzer import paradox_analyzer
from app.services.profile_io import profile_codec
from app.services.reporter import REPORT_FORMATS, report_formatter
from app.services.solver import spe_solver


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="Classify the paradoxes of a profile file")
    parser.add_argument("file", help="Profile document")
    parser.add_argument("--format", choices=REPORT_FORMATS, default=settings.DEFAULT_REPORT_FORMAT)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    profile = profile_codec.load_profile(args.file)
    result = spe_solver.spe_path(profile)
    report = paradox_analyzer.classify_paradoxes(profile, result.outcome)
    output = report_formatter.format_report(profile, result, report, fmt=args.format, show_path=False)
    if args.format == "text":
        matrix = paradox_analyzer.margin_matrix(profile)
        rows = ["", "Pairwise margins:"]
        header = "     " + "".join(label.rjust(5) for label in profile.labels)
        rows.append(header)
        for a, label in enumerate(profile.labels):
            cells = "".join(
                ("-" if a == b else f"{matrix[a][b]:+d}").rjust(5) for b in range(profile.m)
            )
            rows.append(label.ljust(5) + cells)
        output += "\n".join(rows)
    print(output)
    return EXIT_OK
