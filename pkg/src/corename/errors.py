"""Exception types shared across the pipeline."""


class CorenameError(Exception):
    """Base class for all pipeline errors (CLI maps these to exit code 2)."""


class InvalidIdentifier(CorenameError):
    """Raised for empty names, all-separator names, or illegal characters."""


class ParseError(CorenameError):
    """Malformed input record; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownKind(ParseError):
    """Rename record names an identifier kind outside the supported five."""


class RepoError(CorenameError):
    """Version-control repository is missing, unreadable, or not a repo."""


class DegenerateResult(CorenameError):
    """Applying a chunk would leave an identifier with zero words."""


class NoDataError(CorenameError):
    """A statistic was requested over an empty or all-filtered population."""
