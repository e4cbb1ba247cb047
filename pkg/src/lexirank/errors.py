"""Exception types shared across the package.

The CLI maps these onto exit codes: parse/encoding/IO problems exit
with 2, domain and analysis errors with 1.
"""


class LexirankError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LexirankError, ValueError):
    """Input is well-formed but outside an operation's domain.

    Examples: a sentiment label outside {-1, 0, +1}, a constant sequence
    passed to a correlation, a rank out of range.
    """


class ParseError(LexirankError):
    """A file could not be parsed.

    Carries the 1-based line number of the offending record when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EncodingError(ParseError):
    """Input bytes are not valid UTF-8."""
