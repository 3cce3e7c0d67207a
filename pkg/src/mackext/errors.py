"""Exception hierarchy shared by all modules."""


class MackExtError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(MackExtError, ValueError):
    """Bad input: caller error rather than a mathematical failure."""


class UnsupportedPrime(ValidationError):
    pass


class ZeroVector(ValidationError):
    pass


class EqualLines(ValidationError):
    pass


class ContextMismatch(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, text="", position=0, expected=()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if expected:
            detail += " (expected " + " or ".join(expected) + ")"
        super().__init__(f"{detail} at position {position}")


class SizeGuard(ValidationError):
    pass


class FuelExhausted(MackExtError):
    """Reduction did not finish within its step budget.

    ``partial`` holds whatever had been accumulated so far and ``steps`` the
    number of rewrite steps performed.  Seeing this means a rule loops, not
    that the input is special.
    """

    def __init__(self, message, partial=None, steps=0):
        super().__init__(message)
        self.partial = partial
        self.steps = steps


class InternalCheckFailed(MackExtError):
    pass


class NotNilpotent(InternalCheckFailed):
    pass
