"""
verify-paper: run the embedded reference scenarios.
"""

import argparse

from app.cli.deps import EXIT_MISMATCH, EXIT_OK
from app.services.fixture_runner import fixture_runner


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify-paper", help="Check the embedded reference scenarios")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    suite = fixture_runner.run_fixtures()
    width = max((len(check.name) for check in suite.checks), default=0)
    for check in suite.checks:
        status = "PASS" if check.passed else "FAIL"
        winners = "{" + ",".join(check.actual_winners) + "}"
        print(f"{status}  {check.name.ljust(width)}  {winners:<10} {check.source}")
        for mismatch in check.mismatches:
            print(f"      {mismatch}")
    print(f"{suite.passed}/{suite.total} fixtures passed")
    return EXIT_OK if suite.ok else EXIT_MISMATCH
