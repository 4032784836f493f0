"""Exception types shared across the package."""


class LawayError(Exception):
    """Base class for every error raised by lawayacm."""


class InputError(LawayError, ValueError):
    """Malformed or out-of-domain input (dimension mismatch, negative degree, ...)."""


class FeatureError(LawayError):
    """The requested operation is not available on this surface or bundle."""


class ParseError(InputError):
    """Syntax error in a divisor or bundle expression."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


class InconsistencyError(LawayError):
    """An assumption contradicts a value forced by the long exact sequences."""

    def __init__(self, twist, index, message):
        self.twist = twist
        self.index = index
        super().__init__(f"h{index} at twist {twist}: {message}")


class WindowError(LawayError):
    """The twist window is too small to certify vanishing at its ends."""


class IndeterminateError(LawayError):
    """A predicate needs an entry that the LES bookkeeping leaves as a range."""
