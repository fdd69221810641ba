"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates an operation's precondition (index range, shape, ...)."""


class CapacityError(ValueError):
    """The instance is larger than an exact method is guarded to handle."""


class NotAddableError(ValueError):
    pass


class NotMultipliableError(ValueError):
    pass


class GraphParseError(ValueError):
    """Malformed graph file; carries 1-based line and column of the problem."""

    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, column {col}: {message}")
