"""Exception types shared across the package."""


class PolyominoIdealsError(Exception):
    """Base class for all package-specific errors."""


class NotProperIntervalError(PolyominoIdealsError, ValueError):
    """An interval operation required a proper interval (lo.x < hi.x and lo.y < hi.y)."""


class EmptyPolyominoError(PolyominoIdealsError, ValueError):
    """A polyomino must contain at least one cell."""


class DisconnectedCellsError(PolyominoIdealsError, ValueError):
    """The given cells do not form an edge-connected set.

    ``components`` holds the connected components found, each a sorted
    tuple of lower-left corners.
    """

    def __init__(self, components):
        self.components = tuple(components)
        super().__init__(
            "disconnected: %d components: %s"
            % (len(self.components), "; ".join(str(list(c)) for c in self.components))
        )


class NotClosedPathError(PolyominoIdealsError, ValueError):
    """The operation is only defined for closed path polyominoes."""


class BudgetExceededError(PolyominoIdealsError, RuntimeError):
    """A step/node budget was exhausted before the computation finished.

    ``partial`` carries whatever intermediate state was available (for a
    Groebner run, the basis accumulated so far).
    """

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class LogCorruptError(PolyominoIdealsError, ValueError):
    """A harness log line could not be parsed; the message names the line."""

    def __init__(self, path, line_number, reason):
        self.path = str(path)
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: corrupt log line: {reason}")
