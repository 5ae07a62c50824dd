"""Exception hierarchy shared by every module of the package."""


class WordError(ValueError):
    """Base class for all errors raised by this package."""


class AlphabetMismatch(WordError):
    pass


class BoundsError(WordError):
    pass


class ParseError(WordError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegeneratePattern(WordError):
    pass


class ParameterError(WordError):
    pass


class LimitError(WordError):
    pass


class SearchBudgetExceeded(WordError):
    """Raised when a bounded search gives up before it could decide."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats or {}


class InsufficientOccurrences(WordError):
    pass


class InsufficientComplexity(WordError):
    pass


class ConstructionError(WordError):
    pass


class PrefixTooShort(ConstructionError):
    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
