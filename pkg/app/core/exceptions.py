"""
Domain errors shared by the services and the command line.
"""

from typing import Optional


class ElectionError(ValueError):
    """Base class for every domain error raised by the toolkit."""


class EmptySubsetError(ElectionError):
    def __init__(self, message: str = "empty subset"):
        super().__init__(message)


class IllegalBallotError(ElectionError):
    pass


class TerminalStateError(ElectionError):
    """Raised when a ballot is applied after the last voter has moved."""


class FeasibilityError(ElectionError):
    """A size guard refused the requested computation."""


class ProfileParseError(ElectionError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
