"""Exception hierarchy shared by all layers of the engine."""


class SurrealError(Exception):
    """Base class for all domain errors.

    Instances may carry a ``span`` attribute (a ``parser.Span``) when the
    error was triggered while evaluating a parsed expression; the CLI uses
    it for diagnostics.
    """

    span = None


class EmptyIntervalError(SurrealError):
    """Interval bounds with lo >= hi denote no number."""


class NoParentError(SurrealError):
    """0 is the root of the genealogical tree and has no parent."""


class LimitExceededError(SurrealError):
    """A generation/depth request exceeded the configured cap."""


class InvalidNameError(SurrealError):
    """A name {X|Y} requires X < Y elementwise."""


class UnsupportedError(SurrealError):
    """The request is outside what the finite engine represents."""


class RecursionCapError(SurrealError):
    """A genetic operation was fed inputs younger than the recursion cap."""


class NotPositiveError(SurrealError):
    """The operation is only defined for strictly positive numbers."""


class NotOrdinalError(SurrealError):
    """The operand is not an ordinal (Cantor-normal-form shaped) number."""


class ParseError(SurrealError):
    """Syntax error, with the offending source span and expected tokens."""

    def __init__(self, message, span=None, expected=()):
        super().__init__(message)
        self.span = span
        self.expected = frozenset(expected)


class UnbalancedBraceError(ParseError):
    """A grouping "()" or name "{}" bracket has no matching partner."""


class EmptyInputError(ParseError):
    """The input contains no expression at all."""
