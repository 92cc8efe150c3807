from app.cli.commands import analyze, enumeration, search, solve, verify

COMMANDS = (solve, analyze, search, verify, enumeration)


def include_commands(subparsers) -> None:
    for command in COMMANDS:
        command.register(subparsers)
