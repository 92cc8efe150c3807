import sys
from typing import List, Optional

from pydantic import ValidationError

from app.cli.deps import EXIT_REFUSED, EXIT_USAGE, CliArgumentParser
from app.cli.router import include_commands
from app.core.config import settings
from app.core.exceptions import ElectionError, FeasibilityError
from app.core.logging import configure_logging, get_logger

logger = get_logger("app.main")


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="sequential-voting",
        description=f"{settings.PROJECT_NAME}: equilibria and paradoxes of sequential elections",
    )
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", metavar="command", parser_class=CliArgumentParser)
    subparsers.required = True
    include_commands(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    logger.debug("dispatching %s", args.command)
    try:
        return args.handler(args)
    except FeasibilityError as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (ElectionError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
