"""Exception hierarchy shared by all modules."""


class TamariError(Exception):
    """Base class for domain errors (CLI exit code 1 unless noted)."""


class ParseError(TamariError, ValueError):
    """Malformed textual input (CLI exit code 2)."""


class MalformedPolish(ParseError):
    pass


class UndefinedSubtree(TamariError, KeyError):
    pass


class IndexOutOfRange(TamariError, IndexError):
    pass


class UndefinedAction(TamariError):
    """A word or element does not act on the given tree.

    ``prefix_length`` is the number of letters that acted successfully
    before the failure (``None`` for whole-element actions).
    """

    def __init__(self, message, prefix_length=None):
        super().__init__(message)
        self.prefix_length = prefix_length


class SizeMismatch(TamariError):
    pass


class NotComparable(TamariError):
    pass


class InconsistentCovering(TamariError):
    pass


class CapacityGuard(TamariError):
    """Requested enumeration or search exceeds the configured cap (CLI exit 3)."""


class InternalInvariantViolation(TamariError, AssertionError):
    pass
