"""Exception hierarchy shared by every module."""


class WordError(ValueError):
    """Base class for rejected inputs."""


class AlphabetError(WordError):
    """Raised when a word uses more than two distinct letters."""


class EmptyWordError(WordError):
    """Raised by operations that are undefined on the empty word."""


class UndefinedParameterError(WordError):
    """H, K, L, R are only defined for words over exactly two letters."""


class AmbiguousSpecialError(WordError):
    """A singular longest-special accessor found more than one candidate."""


class UndefinedClassificationError(WordError):
    """Open/closed classification requested for the empty word."""


class NotApplicableError(WordError):
    """A structural witness was requested for a word outside its domain."""


class BudgetError(WordError):
    """Requested enumeration length exceeds the configured budget."""


class UnknownStatementError(WordError):
    """A statement id passed to the verifier does not exist."""


class RouteDisagreementError(RuntimeError):
    """Independent trapezoidality routes disagreed. Always an implementation bug."""


class InvariantError(AssertionError):
    """A result failed one of the implication checks run before returning it."""
