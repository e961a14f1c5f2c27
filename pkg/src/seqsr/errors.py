"""Exception hierarchy shared by the library and the command line front end."""


class SeqSrError(Exception):
    """Base class for every error raised by this package."""


class InputError(SeqSrError, ValueError):
    """Malformed or out-of-range input (bad labels, invalid pairs, r < 2, ...)."""


class ParseError(InputError):
    """A text file could not be parsed; carries the offending line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DegenerateComplexError(InputError):
    """An operation was asked for a result outside the nonvoid/nonfull range."""


class ResourceError(SeqSrError):
    """A configured enumeration cap would be exceeded."""

    def __init__(self, cap_name, limit, actual):
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
        super().__init__(f"{cap_name} exceeded: {actual} > {limit}")
