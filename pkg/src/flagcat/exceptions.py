class FlagcatError(Exception):
    """Base class for engine errors."""


class BoundExceededError(FlagcatError):
    """An exhaustive computation was asked for beyond its configured size bound."""


class DimensionMismatchError(FlagcatError, ValueError):
    """Tuples with different ambient ``n`` were combined."""


class DegreeMismatchError(FlagcatError, ValueError):
    """A character was evaluated on a class of the wrong degree."""


class ComposabilityError(FlagcatError, ValueError):
    """Two morphisms do not compose."""


class ConsistencyError(FlagcatError):
    """An internal cross-check failed; this indicates a bug, not bad input."""


class ParseError(FlagcatError, ValueError):
    """A textual label could not be parsed."""

    def __init__(self, message, token=None):
        super().__init__(message if token is None else f"{message}: {token!r}")
        self.token = token
