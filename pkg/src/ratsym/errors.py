class RatsymError(Exception):
    """Base class for all library errors."""


class DimensionError(RatsymError, ValueError):
    pass


class RingMismatchError(RatsymError, ValueError):
    pass


class PreconditionError(RatsymError, ValueError):
    """An operation was called outside the hypotheses it is defined for."""


class UndefinedColonError(PreconditionError):
    pass


class InfeasibleError(RatsymError):
    pass


class StabilityError(RatsymError):
    """A claimed stability denominator was refuted by a jump scan."""


class ParseError(RatsymError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
