"""Exception types shared across the package."""


class ThompsonError(Exception):
    """Base class for all errors raised by this package."""


class WordSyntaxError(ThompsonError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DiagramSyntaxError(ThompsonError, ValueError):
    pass


class MalformedDiagram(ThompsonError, ValueError):
    """Top and bottom forests do not have matching leaf counts."""


class PreconditionError(ThompsonError, ValueError):
    """An operation was called on an element outside its domain."""


class BudgetExceeded(ThompsonError, RuntimeError):
    """An enumeration outgrew its configured element budget."""
