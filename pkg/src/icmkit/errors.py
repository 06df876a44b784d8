"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class IcmkitError(Exception):
    """Base class for every error raised by icmkit."""


class MalformedInputError(IcmkitError, ValueError):
    """A face, edge or label does not fit its ambient vertex set."""


class VoidComplexError(IcmkitError, ValueError):
    """The operation is undefined for the void complex (no faces at all)."""


class NotAFaceError(IcmkitError, ValueError):
    pass


class PreconditionError(IcmkitError, ValueError):
    pass


class NoResolutionDataError(IcmkitError, ValueError):
    """The Stanley-Reisner ideal is zero, so it has no generators to resolve."""


class RecipeError(IcmkitError, ValueError):
    pass


class EnumerationLimitError(IcmkitError):
    """An exhaustive enumeration would exceed its configured vertex limit."""

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(
            f"{what} refuses n={n} (limit {limit}); pass an explicit override to proceed"
        )
        self.n = n
        self.limit = limit


class InternalConsistencyError(IcmkitError, AssertionError):
    """Two independently computed quantities disagree; indicates a bug."""


class ParseError(IcmkitError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source
