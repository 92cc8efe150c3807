"""
solve: equilibrium outcome and canonical ballot path of a profile file.
"""

import argparse

from app.cli.deps import EXIT_OK
from app.core.config import settings
from app.services.analyzer import paradox_analyzer
from app.services.profile_io import profile_codec
from app.services.reporter import REPORT_FORMATS, report_formatter
from app.services.solver import spe_solver


def register(subparsers) -> None:
    parser = subparsers.add_parser("solve", help="Solve a profile file by backward induction")
    parser.add_argument("file", help="Profile document")
    parser.add_argument("--format", choices=REPORT_FORMATS, default=settings.DEFAULT_REPORT_FORMAT)
    parser.add_argument("--path", action="store_true", help="Show the equilibrium ballots")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    profile = profile_codec.load_profile(args.file)
    result = spe_solver.spe_path(profile)
    report = paradox_analyzer.classify_paradoxes(profile, result.outcome)
    print(report_formatter.format_report(
        profile,
        result,
        report,
        fmt=args.format,
        show_path=args.path,
        sincere=spe_solver.sincere_outcome(profile),
    ))
    return EXIT_OK
