"""Exception hierarchy shared by every layer of the package."""


class CompPathError(Exception):
    """Base class for all domain errors raised by comppaths."""


class NotARedex(CompPathError):
    pass


class IllFormed(CompPathError):
    """A path or cell whose boundaries do not chain.

    ``position`` locates the offending node (a tuple of child indices).
    """

    def __init__(self, position=(), reason=""):
        self.position = tuple(position)
        self.reason = reason
        super().__init__(f"ill-formed at {list(self.position)}: {reason}")


class InvalidPosition(CompPathError):
    def __init__(self, position, reason="no such subterm"):
        self.position = tuple(position)
        super().__init__(f"invalid position {list(self.position)}: {reason}")


class NoMatch(CompPathError):
    pass


class FuelExhausted(CompPathError):
    def __init__(self, steps):
        self.steps = steps
        super().__init__(f"normalization did not finish within {steps} steps")


class NotEquivalent(CompPathError):
    pass


class NotParallel(CompPathError):
    pass


class BadStep(IllFormed):
    """A recorded rewrite step that does not re-check."""


class BadChain(IllFormed):
    """A composition whose pieces do not meet."""


class BadBoundary(IllFormed):
    """A cell whose two sides are not parallel, or whose claimed boundary is wrong."""


class SExprSyntaxError(CompPathError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
