"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class FslabError(Exception):
    exit_code = 1


class ParseError(FslabError):
    """Malformed instance descriptor or catalog name."""

    exit_code = 2

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class ValidationError(FslabError):
    """An algebraic axiom failed.  ``witness`` holds the offending elements."""

    exit_code = 3

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class CeilingError(FslabError):
    """An exhaustive computation would exceed a configured size ceiling."""

    exit_code = 4

    def __init__(self, message, ceiling=None, found=None):
        self.ceiling = ceiling
        self.found = found
        super().__init__(message)


class InconsistencyError(FslabError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 5


class TheoremFailure(FslabError):
    exit_code = 5
